//! Exact rational arithmetic plus a `+inf` sentinel.
//!
//! All solver math runs on arbitrary-precision rationals; floating point never
//! enters any comparison. `ExtRat` adjoins a single positive infinity, which is
//! a first-class value here: it appears as a bid ("win unconditionally"), as a
//! virtual value ratio bracketing the query order, and as the upper end of an
//! unbounded multiplier range.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; the scalar type of every exact computation.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"` (optionally signed) into a [`Rat`].
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("expected a rational like `3` or `3/4`, got `{s}`"));
    match s.split_once('/') {
        None => {
            let p: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(Rat::from_integer(p))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| mk_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| mk_err())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Formats a [`Rat`] canonically: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational extended with positive infinity.
///
/// `Infinite` compares strictly greater than every finite value, and scaling it
/// by a positive rational leaves it infinite. No arithmetic that would need
/// `∞ − ∞` or `0 · ∞` is provided; callers structure their formulas so those
/// forms never arise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtRat {
    Finite(Rat),
    Infinite,
}

impl ExtRat {
    pub fn zero() -> Self {
        ExtRat::Finite(Rat::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtRat::Finite(r) => Some(r),
            ExtRat::Infinite => None,
        }
    }

    /// Exact quotient `n/d` of finite nonneg quantities, mapping `d == 0` to `+inf`.
    ///
    /// This is the right completion for the ratio and margin formulas here: a
    /// vanishing denominator always coincides with a vacuous constraint whose
    /// bound should dominate every finite candidate. `n` must be positive when
    /// `d` is zero so the limit is unambiguously `+inf`.
    pub fn div_or_infinite(n: Rat, d: Rat) -> Self {
        if d.is_zero() {
            debug_assert!(n.is_positive(), "0/0 has no sensible extended value");
            ExtRat::Infinite
        } else {
            ExtRat::Finite(n / d)
        }
    }

    /// Scales by a positive finite rational.
    pub fn scale(&self, by: &Rat) -> Self {
        debug_assert!(by.is_positive());
        match self {
            ExtRat::Finite(r) => ExtRat::Finite(r * by),
            ExtRat::Infinite => ExtRat::Infinite,
        }
    }

    /// Subtracts a finite rational; infinity absorbs the subtraction.
    pub fn sub_finite(&self, rhs: &Rat) -> Self {
        match self {
            ExtRat::Finite(r) => ExtRat::Finite(r - rhs),
            ExtRat::Infinite => ExtRat::Infinite,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            ExtRat::Finite(r) => r.is_positive(),
            ExtRat::Infinite => true,
        }
    }
}

impl From<Rat> for ExtRat {
    fn from(r: Rat) -> Self {
        ExtRat::Finite(r)
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
            (ExtRat::Finite(_), ExtRat::Infinite) => Ordering::Less,
            (ExtRat::Infinite, ExtRat::Finite(_)) => Ordering::Greater,
            (ExtRat::Infinite, ExtRat::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialEq<Rat> for ExtRat {
    fn eq(&self, other: &Rat) -> bool {
        matches!(self, ExtRat::Finite(r) if r == other)
    }
}

impl PartialOrd<Rat> for ExtRat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        match self {
            ExtRat::Finite(r) => r.partial_cmp(other),
            ExtRat::Infinite => Some(Ordering::Greater),
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => f.write_str(&format_rat(r)),
            ExtRat::Infinite => f.write_str("+inf"),
        }
    }
}

/// Parses `"p"`, `"p/q"`, or `"+inf"` into an [`ExtRat`].
pub fn parse_ext(s: &str) -> Result<ExtRat> {
    let t = s.trim();
    if t == "+inf" || t == "inf" {
        Ok(ExtRat::Infinite)
    } else {
        parse_rat(t).map(ExtRat::Finite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_signs() {
        assert_eq!(parse_rat("3").unwrap(), rat_int(3));
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rat(" 10/4 ").unwrap(), rat(5, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rat(&rat(10, 4)), "5/2");
        assert_eq!(format_rat(&rat(8, 2)), "4");
        assert_eq!(format_rat(&rat(-3, 6)), "-1/2");
    }

    #[test]
    fn infinity_dominates_every_finite_value() {
        let big = ExtRat::Finite(rat_int(i64::MAX));
        assert!(ExtRat::Infinite > big);
        assert!(ExtRat::Infinite > rat_int(i64::MAX));
        assert_eq!(ExtRat::Infinite, ExtRat::Infinite);
        assert!(!ExtRat::Infinite.scale(&rat(1, 1_000_000)).is_finite());
    }

    #[test]
    fn extended_parse_round_trips() {
        assert_eq!(parse_ext("+inf").unwrap(), ExtRat::Infinite);
        assert_eq!(parse_ext("5/3").unwrap(), ExtRat::Finite(rat(5, 3)));
        assert_eq!(ExtRat::Infinite.to_string(), "+inf");
        assert_eq!(ExtRat::Finite(rat(5, 3)).to_string(), "5/3");
    }

    #[test]
    fn division_completes_to_infinity_exactly_at_zero_denominator() {
        assert_eq!(
            ExtRat::div_or_infinite(rat_int(3), rat_int(2)),
            ExtRat::Finite(rat(3, 2))
        );
        assert_eq!(
            ExtRat::div_or_infinite(rat_int(3), rat_int(0)),
            ExtRat::Infinite
        );
    }
}
