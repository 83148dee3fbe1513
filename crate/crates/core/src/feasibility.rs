//! Exact one- and two-variable feasibility over rationals with strict/weak
//! bound tracking.
//!
//! The multiplier systems this crate solves always have the same tiny shape:
//! interval bounds on `μ1`, interval bounds on `μ2`, and a sandwich
//! `A·μ1 ⋚ μ2 ⋚ B·μ1` linking the two. [`solve_two_var`] decides such a system
//! by Fourier–Motzkin elimination of `μ2` — pairing every lower bound with
//! every upper bound — so the projection onto `μ1` is exact and any point in it
//! extends to a full solution.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{ExtRat, Rat};

/// One bound of an interval: the value plus whether the comparison excludes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: Rat,
    pub strict: bool,
}

/// An interval over the rationals, each end weak or strict, upper possibly
/// `+inf` (meaning unbounded). Nonempty iff `lower < upper`, or the ends are
/// equal with both bounds weak.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityInterval {
    lower: Rat,
    lower_strict: bool,
    upper: ExtRat,
    upper_strict: bool,
}

impl FeasibilityInterval {
    /// The positive half-line `(0, +inf)`, the natural starting domain for a
    /// bid multiplier before any constraint is applied.
    pub fn positive() -> Self {
        FeasibilityInterval {
            lower: Rat::zero(),
            lower_strict: true,
            upper: ExtRat::Infinite,
            upper_strict: true,
        }
    }

    pub fn lower(&self) -> Bound {
        Bound {
            value: self.lower.clone(),
            strict: self.lower_strict,
        }
    }

    /// The upper bound, `None` when the interval is unbounded above.
    pub fn upper(&self) -> Option<Bound> {
        match &self.upper {
            ExtRat::Finite(v) => Some(Bound {
                value: v.clone(),
                strict: self.upper_strict,
            }),
            ExtRat::Infinite => None,
        }
    }

    pub fn upper_ext(&self) -> &ExtRat {
        &self.upper
    }

    pub fn lower_is_strict(&self) -> bool {
        self.lower_strict
    }

    pub fn upper_is_strict(&self) -> bool {
        self.upper_strict
    }

    /// Intersects with `μ > v` (strict) or `μ ≥ v`, keeping the tighter bound.
    pub fn tighten_lower(&mut self, v: Rat, strict: bool) {
        if v > self.lower || (v == self.lower && strict && !self.lower_strict) {
            self.lower = v;
            self.lower_strict = strict;
        }
    }

    /// Intersects with `μ < v` (strict) or `μ ≤ v`, keeping the tighter bound.
    pub fn tighten_upper(&mut self, v: Rat, strict: bool) {
        let tighter = match &self.upper {
            ExtRat::Infinite => true,
            ExtRat::Finite(u) => v < *u || (v == *u && strict && !self.upper_strict),
        };
        if tighter {
            self.upper = ExtRat::Finite(v);
            self.upper_strict = strict;
        }
    }

    pub fn is_empty(&self) -> bool {
        match &self.upper {
            ExtRat::Infinite => false,
            ExtRat::Finite(u) => {
                self.lower > *u || (self.lower == *u && (self.lower_strict || self.upper_strict))
            }
        }
    }

    /// A canonical interior point: the single point of a degenerate interval,
    /// `lower + 1` when unbounded above, otherwise the midpoint. `None` if the
    /// interval is empty.
    pub fn pick(&self) -> Option<Rat> {
        if self.is_empty() {
            return None;
        }
        Some(match &self.upper {
            ExtRat::Infinite => &self.lower + Rat::one(),
            ExtRat::Finite(u) => {
                if self.lower == *u {
                    u.clone()
                } else {
                    (&self.lower + u) / Rat::from_integer(2.into())
                }
            }
        })
    }

    /// Does `v` satisfy both bounds?
    pub fn contains(&self, v: &Rat) -> bool {
        let above = if self.lower_strict {
            *v > self.lower
        } else {
            *v >= self.lower
        };
        let below = match &self.upper {
            ExtRat::Infinite => true,
            ExtRat::Finite(u) => {
                if self.upper_strict {
                    v < u
                } else {
                    v <= u
                }
            }
        };
        above && below
    }
}

/// The sandwich `A·μ1 ⋚ μ2 ⋚ B·μ1`. Each side is optional (absent when the
/// corresponding constraint is vacuous) and carries its own strictness;
/// coefficients must be nonnegative.
#[derive(Clone, Debug, Default)]
pub struct RatioWindow {
    /// `Some((a, strict))` means `μ2 > a·μ1` (or `≥` when weak).
    pub lower: Option<(Rat, bool)>,
    /// `Some((b, strict))` means `μ2 < b·μ1` (or `≤` when weak).
    pub upper: Option<(Rat, bool)>,
}

/// Decides `{μ1 ∈ mu1, μ2 ∈ mu2, window}` exactly and returns a witness point,
/// or `None` when the system is infeasible.
///
/// Both intervals must lie in the positive half-line. Errs with an invariant
/// violation only if the elimination certifies feasibility yet the back
/// substitution finds no `μ2` — which would be a bug, not an input condition.
pub fn solve_two_var(
    mu1: &FeasibilityInterval,
    mu2: &FeasibilityInterval,
    window: &RatioWindow,
) -> Result<Option<(Rat, Rat)>> {
    if mu1.is_empty() || mu2.is_empty() {
        return Ok(None);
    }

    // Eliminate μ2: combine each lower bound on μ2 with each upper bound.
    let mut projected = mu1.clone();

    // (a·μ1 vs b·μ1): over μ1 > 0 the sandwich itself must be satisfiable.
    if let (Some((a, sa)), Some((b, sb))) = (&window.lower, &window.upper) {
        let strict = *sa || *sb;
        if a > b || (a == b && strict) {
            return Ok(None);
        }
    }

    // (constant lower vs b·μ1): lo2 ⋚ b·μ1 pushes μ1 up.
    if let Some((b, sb)) = &window.upper {
        debug_assert!(b.is_positive(), "upper window coefficient must be positive");
        let lo2 = mu1_floor_from(mu2.lower(), b, *sb);
        projected.tighten_lower(lo2.value, lo2.strict);
    }

    // (a·μ1 vs constant upper): a·μ1 ⋚ hi2 caps μ1.
    if let Some((a, sa)) = &window.lower {
        if let Some(hi2) = mu2.upper() {
            let strict = *sa || hi2.strict;
            if a.is_zero() {
                // 0 ⋚ hi2: no bound on μ1, but the comparison itself must hold.
                let ok = if strict {
                    hi2.value.is_positive()
                } else {
                    !hi2.value.is_negative()
                };
                if !ok {
                    return Ok(None);
                }
            } else {
                projected.tighten_upper(hi2.value / a, strict);
            }
        }
    }

    let Some(m1) = projected.pick() else {
        return Ok(None);
    };

    // Back-substitute: the μ2 interval at μ1 = m1 is nonempty by construction.
    let mut range2 = mu2.clone();
    if let Some((a, sa)) = &window.lower {
        range2.tighten_lower(a * &m1, *sa);
    }
    if let Some((b, sb)) = &window.upper {
        range2.tighten_upper(b * &m1, *sb);
    }
    let m2 = range2.pick().ok_or_else(|| {
        Error::Invariant("two-variable elimination found no back-substitution point".into())
    })?;
    Ok(Some((m1, m2)))
}

/// The μ1 lower bound induced by `lo2 ⋚ b·μ1`.
fn mu1_floor_from(lo2: Bound, b: &Rat, b_strict: bool) -> Bound {
    Bound {
        value: lo2.value / b,
        strict: lo2.strict || b_strict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn interval(lo: (i64, i64), lo_strict: bool, hi: Option<(i64, i64)>, hi_strict: bool) -> FeasibilityInterval {
        let mut iv = FeasibilityInterval::positive();
        iv.tighten_lower(rat(lo.0, lo.1), lo_strict);
        if let Some((n, d)) = hi {
            iv.tighten_upper(rat(n, d), hi_strict);
        }
        iv
    }

    #[test]
    fn tightening_keeps_the_stronger_bound_at_equal_values() {
        let mut iv = FeasibilityInterval::positive();
        iv.tighten_lower(rat_int(2), false);
        iv.tighten_lower(rat_int(2), true); // strict beats weak at the same value
        assert!(iv.lower_is_strict());
        iv.tighten_lower(rat_int(1), true); // looser value is ignored
        assert_eq!(iv.lower().value, rat_int(2));
    }

    #[test]
    fn emptiness_follows_the_strictness_rules() {
        assert!(!interval((1, 1), false, Some((1, 1)), false).is_empty()); // [1,1]
        assert!(interval((1, 1), true, Some((1, 1)), false).is_empty()); // (1,1]
        assert!(interval((1, 1), false, Some((1, 1)), true).is_empty()); // [1,1)
        assert!(interval((2, 1), false, Some((1, 1)), false).is_empty()); // [2,1]
        assert!(!interval((2, 1), true, None, false).is_empty()); // (2, +inf)
    }

    #[test]
    fn pick_uses_midpoint_plus_one_and_degenerate_endpoint() {
        assert_eq!(interval((1, 1), false, Some((2, 1)), false).pick(), Some(rat(3, 2)));
        assert_eq!(interval((2, 1), true, None, false).pick(), Some(rat_int(3)));
        assert_eq!(interval((5, 3), false, Some((5, 3)), false).pick(), Some(rat(5, 3)));
        assert_eq!(interval((1, 1), true, Some((1, 1)), true).pick(), None);
        // The picked point always lies inside, even with strict ends.
        let iv = interval((1, 1), true, Some((5, 4)), true);
        assert!(iv.contains(&iv.pick().unwrap()));
    }

    #[test]
    fn sandwich_with_equal_coefficients_needs_both_sides_weak() {
        let mu = interval((1, 1), false, None, false);
        let weak = RatioWindow {
            lower: Some((rat_int(2), false)),
            upper: Some((rat_int(2), false)),
        };
        let (m1, m2) = solve_two_var(&mu, &mu, &weak).unwrap().unwrap();
        assert_eq!(m2, rat_int(2) * &m1);

        let strict = RatioWindow {
            lower: Some((rat_int(2), true)),
            upper: Some((rat_int(2), false)),
        };
        assert_eq!(solve_two_var(&mu, &mu, &strict).unwrap(), None);
    }

    #[test]
    fn cross_bounds_propagate_through_the_window() {
        // μ2 ≥ 6 and μ2 ≤ 2·μ1 force μ1 ≥ 3, clashing with μ1 ≤ 5/2.
        let mu1 = interval((1, 1), false, Some((5, 2)), false);
        let mu2 = interval((6, 1), false, None, false);
        let window = RatioWindow {
            lower: None,
            upper: Some((rat_int(2), false)),
        };
        assert_eq!(solve_two_var(&mu1, &mu2, &window).unwrap(), None);

        // Relaxing μ1's cap to 3 leaves exactly the point (3, 6).
        let mu1 = interval((1, 1), false, Some((3, 1)), false);
        let got = solve_two_var(&mu1, &mu2, &window).unwrap().unwrap();
        assert_eq!(got, (rat_int(3), rat_int(6)));
    }

    #[test]
    fn witnesses_satisfy_every_stated_constraint() {
        let mu1 = interval((1, 1), false, Some((2, 1)), false);
        let mu2 = interval((5, 3), true, Some((4, 1)), false);
        let window = RatioWindow {
            lower: Some((rat(1, 2), true)),
            upper: Some((rat_int(4), false)),
        };
        let (m1, m2) = solve_two_var(&mu1, &mu2, &window).unwrap().unwrap();
        assert!(mu1.contains(&m1));
        assert!(mu2.contains(&m2));
        assert!(m2 > rat(1, 2) * &m1);
        assert!(m2 <= rat_int(4) * &m1);
    }
}
