//! Uniform-bidding equilibria of the two-bidder game.
//!
//! Under uniform bidding each bidder scales its minimum viable bids by a single
//! multiplier `μ_i ≥ 1`, so bidder `i` bids `μ_i · T_i · v_{i,j}` everywhere.
//! On a normalized instance every equilibrium then allocates a ratio-order
//! prefix of length `k` to bidder 1 and the rest to bidder 2. A given `k` is an
//! equilibrium index iff some `(μ1, μ2)` simultaneously satisfies six
//! conditions: the allocation window (the multiplier ratio falls between the
//! bid thresholds at positions `k` and `k+1`), both tCPA budgets, both
//! one-step stability conditions (neither bidder can afford the next query it
//! loses), and undominatedness of the multipliers.
//!
//! [`equilibrium_exists`] decides this *without* touching multipliers, through
//! two closed-form margins `C1, C2` and the index bounds `kmin, kmax`;
//! [`witness_multipliers`] then produces an explicit `(μ1, μ2)` via interval
//! elimination. The two routes are checked against each other in the oracle
//! module.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::feasibility::{solve_two_var, FeasibilityInterval, RatioWindow};
use crate::model::{NormalizedInstance, Targets, TieBreak};
use crate::rational::{ExtRat, Rat};

/// A pair of uniform bid multipliers, both at least 1 (smaller multipliers bid
/// below minimum viable bids and are dominated).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformProfile {
    mu1: Rat,
    mu2: Rat,
}

impl UniformProfile {
    pub fn new(mu1: Rat, mu2: Rat) -> Result<Self> {
        if mu1 < Rat::one() || mu2 < Rat::one() {
            return Err(Error::InvalidInput(
                "uniform multipliers must be at least 1".into(),
            ));
        }
        Ok(UniformProfile { mu1, mu2 })
    }

    pub fn mu1(&self) -> &Rat {
        &self.mu1
    }

    pub fn mu2(&self) -> &Rat {
        &self.mu2
    }

    /// The multiplier ratio `μ2/μ1` that the allocation window constrains.
    pub fn ratio(&self) -> Rat {
        &self.mu2 / &self.mu1
    }
}

/// One evaluated inequality of the condition ledger. `comparison` holds the
/// exact (lhs, rhs) pair; `None` marks a vacuously true condition (a stability
/// condition at an end allocation, where there is no next query to lose).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub comparison: Option<(Rat, Rat)>,
}

impl Check {
    fn of(lhs: Rat, rhs: Rat, holds: bool) -> Self {
        Check {
            holds,
            comparison: Some((lhs, rhs)),
        }
    }

    fn vacuous() -> Self {
        Check {
            holds: true,
            comparison: None,
        }
    }
}

/// The allocation-window verdict: is `ratio = μ2/μ1` inside
/// `(threshold(k+1), threshold(k)]` (tie to bidder 1) or
/// `[threshold(k+1), threshold(k))` (tie to bidder 2)?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCheck {
    pub holds: bool,
    pub lower: ExtRat,
    pub ratio: Rat,
    pub upper: ExtRat,
}

/// All six equilibrium conditions for a multiplier pair at allocation index
/// `k`, each with its exact compared values, reproducible from the inputs
/// alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionLedger {
    /// The multiplier ratio falls in the window selecting the split-`k`
    /// allocation.
    pub ratio_window: WindowCheck,
    /// Bidder 1's spend on its prefix stays within `T1` times its value.
    pub bidder1_tcpa: Check,
    /// Bidder 2's spend on its suffix stays within `T2` times its value.
    pub bidder2_tcpa: Check,
    /// Bidder 1 cannot afford to also win query `k+1` (vacuous at `k = n`).
    pub bidder1_stable: Check,
    /// Bidder 2 cannot afford to also win query `k` (vacuous at `k = 0`).
    pub bidder2_stable: Check,
    /// Both multipliers are at least 1; compares the smaller one against 1.
    pub undominated: Check,
}

impl ConditionLedger {
    pub fn all_hold(&self) -> bool {
        self.ratio_window.holds
            && self.bidder1_tcpa.holds
            && self.bidder2_tcpa.holds
            && self.bidder1_stable.holds
            && self.bidder2_stable.holds
            && self.undominated.holds
    }
}

/// Existence verdict for allocation index `k`, with the closed-form evidence:
/// both margins must be positive and `k` must lie in `[kmin, kmax]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceCertificate {
    pub k: usize,
    pub c1: ExtRat,
    pub c2: ExtRat,
    pub kmin: usize,
    pub kmax: usize,
    pub exists: bool,
}

/// Bid threshold at position `p`: `T1·v1 / (T2·v2)` of the `p`-th query, the
/// multiplier ratio at which the two uniform bids on that query tie. Positions
/// `0` and `n+1` give the virtual `+inf` and `0` sentinels.
fn threshold(norm: &NormalizedInstance, targets: &Targets, p: usize) -> ExtRat {
    norm.ratio(p).scale(&(targets.get(0) / targets.get(1)))
}

/// Finite threshold for positions `p ≥ 1` (position `n+1` is 0).
fn threshold_finite(norm: &NormalizedInstance, targets: &Targets, p: usize) -> Rat {
    match threshold(norm, targets, p) {
        ExtRat::Finite(r) => r,
        ExtRat::Infinite => unreachable!("threshold is finite for positions ≥ 1"),
    }
}

/// The allocation index selected by a multiplier pair: the unique `k` whose
/// window contains `μ2/μ1`. Thresholds are strictly decreasing in `p`, so this
/// is the largest `p` whose threshold still (weakly, under `Bidder1Wins`)
/// exceeds the ratio.
pub fn allocation_from_multipliers(
    norm: &NormalizedInstance,
    targets: &Targets,
    profile: &UniformProfile,
    tie: TieBreak,
) -> usize {
    let ratio = profile.ratio();
    let n = norm.queries();
    (1..=n)
        .take_while(|&p| {
            let t = threshold(norm, targets, p);
            match tie {
                TieBreak::Bidder1Wins => t >= ratio,
                TieBreak::Bidder2Wins => t > ratio,
            }
        })
        .last()
        .unwrap_or(0)
}

/// Evaluates all six equilibrium conditions for `profile` at allocation index
/// `k ∈ [0, n]`.
pub fn check_conditions(
    norm: &NormalizedInstance,
    targets: &Targets,
    profile: &UniformProfile,
    k: usize,
    tie: TieBreak,
) -> Result<ConditionLedger> {
    let n = norm.queries();
    if k > n {
        return Err(Error::OutOfRange(format!(
            "allocation index {k} exceeds query count {n}"
        )));
    }
    let (t1, t2) = (targets.get(0), targets.get(1));
    let (mu1, mu2) = (profile.mu1(), profile.mu2());

    let ratio = profile.ratio();
    let upper = threshold(norm, targets, k);
    let lower = threshold(norm, targets, k + 1);
    let ratio_ext = ExtRat::Finite(ratio.clone());
    let window_holds = match tie {
        TieBreak::Bidder1Wins => ratio_ext <= upper && ratio_ext > lower,
        TieBreak::Bidder2Wins => ratio_ext < upper && ratio_ext >= lower,
    };
    let ratio_window = WindowCheck {
        holds: window_holds,
        lower,
        ratio,
        upper,
    };

    // Bidder 1 pays bidder 2's bid on each prefix query; budget is T1 · value.
    let b1_spend = mu2 * t2 * norm.prefix_value(1, k);
    let b1_budget = t1 * norm.prefix_value(0, k);
    let bidder1_tcpa = Check::of(b1_spend.clone(), b1_budget.clone(), b1_spend <= b1_budget);

    let b2_spend = mu1 * t1 * norm.suffix_value(0, k + 1);
    let b2_budget = t2 * norm.suffix_value(1, k + 1);
    let bidder2_tcpa = Check::of(b2_spend.clone(), b2_budget.clone(), b2_spend <= b2_budget);

    // One-step stability: extending to the next query must break the extender's
    // budget. Bidder 1 extending to prefix k+1, bidder 2 to suffix from k.
    let bidder1_stable = if k == n {
        Check::vacuous()
    } else {
        let spend = mu2 * t2 * norm.prefix_value(1, k + 1);
        let budget = t1 * norm.prefix_value(0, k + 1);
        Check::of(spend.clone(), budget.clone(), spend > budget)
    };
    let bidder2_stable = if k == 0 {
        Check::vacuous()
    } else {
        let spend = mu1 * t1 * norm.suffix_value(0, k);
        let budget = t2 * norm.suffix_value(1, k);
        Check::of(spend.clone(), budget.clone(), spend > budget)
    };

    let smaller = mu1.min(mu2).clone();
    let undominated = Check::of(smaller.clone(), Rat::one(), smaller >= Rat::one());

    Ok(ConditionLedger {
        ratio_window,
        bidder1_tcpa,
        bidder2_tcpa,
        bidder1_stable,
        bidder2_stable,
        undominated,
    })
}

/// The closed-form existence margins `(C1, C2)` at allocation index `k` for
/// targets `(t1, t2)`.
///
/// `C1` measures how much room bidder 1's stability condition leaves below the
/// window: it is positive iff some `μ2` is simultaneously small enough for the
/// window at `k` and large enough that bidder 1 cannot afford query `k+1`.
/// `C2` is the mirrored margin for bidder 2. Virtual sentinels make `C1`
/// infinite at `k = 0` and `k = n`, and `C2` infinite at `k = 0`.
pub fn existence_margins(
    norm: &NormalizedInstance,
    t1: &Rat,
    t2: &Rat,
    k: usize,
) -> Result<(ExtRat, ExtRat)> {
    let n = norm.queries();
    if k > n {
        return Err(Error::OutOfRange(format!(
            "allocation index {k} exceeds query count {n}"
        )));
    }
    let c1 = if k == 0 || k == n {
        ExtRat::Infinite
    } else {
        let ratio_k = norm.instance().value(0, k - 1) / norm.instance().value(1, k - 1);
        let head = ratio_k * norm.suffix_value(1, k + 1) / norm.suffix_value(0, k + 1);
        let tail = t1 * norm.prefix_value(0, k + 1) / (t2 * norm.prefix_value(1, k + 1));
        ExtRat::Finite(head - tail)
    };
    let c2 = if k == 0 {
        ExtRat::Infinite
    } else {
        let head = t1 * norm.suffix_value(0, k) / (t2 * norm.suffix_value(1, k));
        let ratio_next = if k == n {
            Rat::zero()
        } else {
            norm.instance().value(0, k) / norm.instance().value(1, k)
        };
        let tail = ratio_next * norm.prefix_value(1, k) / norm.prefix_value(0, k);
        ExtRat::Finite(head - tail)
    };
    Ok((c1, c2))
}

/// The index bounds `(kmin, kmax)` outside which one bidder's tCPA budget
/// cannot cover its side of the allocation no matter the multipliers:
/// `kmin` is the first `k` where bidder 2 can afford the suffix beyond `k`
/// at minimum bids, `kmax` the last where bidder 1 can afford the prefix.
/// Both always exist because the empty side costs nothing.
pub fn k_bounds(norm: &NormalizedInstance, targets: &Targets) -> (usize, usize) {
    let n = norm.queries();
    let (t1, t2) = (targets.get(0), targets.get(1));
    let kmin = (0..=n)
        .find(|&k| t2 * norm.suffix_value(1, k + 1) >= t1 * norm.suffix_value(0, k + 1))
        .expect("empty suffix satisfies bidder 2's budget");
    let kmax = (0..=n)
        .rev()
        .find(|&k| t1 * norm.prefix_value(0, k) >= t2 * norm.prefix_value(1, k))
        .expect("empty prefix satisfies bidder 1's budget");
    (kmin, kmax)
}

/// Decides whether allocation index `k` is an equilibrium index, by the closed
/// form: both margins positive and `k ∈ [kmin, kmax]`. Independent of the
/// tie-break rule.
pub fn equilibrium_exists(
    norm: &NormalizedInstance,
    targets: &Targets,
    k: usize,
) -> Result<ExistenceCertificate> {
    let (c1, c2) = existence_margins(norm, targets.get(0), targets.get(1), k)?;
    let (kmin, kmax) = k_bounds(norm, targets);
    let exists = c1.is_positive() && c2.is_positive() && kmin <= k && k <= kmax;
    Ok(ExistenceCertificate {
        k,
        c1,
        c2,
        kmin,
        kmax,
        exists,
    })
}

/// All equilibrium allocation indices, ascending.
pub fn enumerate_equilibria(norm: &NormalizedInstance, targets: &Targets) -> Vec<usize> {
    (0..=norm.queries())
        .filter(|&k| {
            equilibrium_exists(norm, targets, k)
                .expect("k is in range")
                .exists
        })
        .collect()
}

/// The joint multiplier constraints at allocation index `k`: the interval each
/// `μ_i` must lie in (budget and stability bounds plus `μ ≥ 1`) and the window
/// sandwiching `μ2/μ1` between adjacent thresholds.
fn multiplier_system(
    norm: &NormalizedInstance,
    targets: &Targets,
    k: usize,
    tie: TieBreak,
) -> (FeasibilityInterval, FeasibilityInterval, RatioWindow) {
    let n = norm.queries();
    let (t1, t2) = (targets.get(0), targets.get(1));

    let mut mu1 = FeasibilityInterval::positive();
    mu1.tighten_lower(Rat::one(), false);
    if k >= 1 {
        // Bidder 2 must be priced out of the suffix from k.
        mu1.tighten_lower(t2 * norm.suffix_value(1, k) / (t1 * norm.suffix_value(0, k)), true);
    }
    if k < n {
        // Bidder 2's budget must cover the suffix beyond k.
        mu1.tighten_upper(
            t2 * norm.suffix_value(1, k + 1) / (t1 * norm.suffix_value(0, k + 1)),
            false,
        );
    }

    let mut mu2 = FeasibilityInterval::positive();
    mu2.tighten_lower(Rat::one(), false);
    if k < n {
        // Bidder 1 must be priced out of the prefix through k+1.
        mu2.tighten_lower(t1 * norm.prefix_value(0, k + 1) / (t2 * norm.prefix_value(1, k + 1)), true);
    }
    if k >= 1 {
        // Bidder 1's budget must cover the prefix through k.
        mu2.tighten_upper(t1 * norm.prefix_value(0, k) / (t2 * norm.prefix_value(1, k)), false);
    }

    let (upper_strict, lower_strict) = match tie {
        TieBreak::Bidder1Wins => (false, true),
        TieBreak::Bidder2Wins => (true, false),
    };
    let window = RatioWindow {
        lower: Some((threshold_finite(norm, targets, k + 1), lower_strict)),
        upper: (k >= 1).then(|| (threshold_finite(norm, targets, k), upper_strict)),
    };
    (mu1, mu2, window)
}

/// Synthesizes a concrete multiplier pair witnessing equilibrium index `k`.
///
/// Requires `equilibrium_exists` to certify `k` first (precondition error
/// otherwise). Points are chosen canonically: midpoint of a bounded range,
/// lower bound plus one when unbounded, the endpoint itself when the range is
/// a single point. An infeasible system despite a positive certificate is an
/// internal invariant violation.
pub fn witness_multipliers(
    norm: &NormalizedInstance,
    targets: &Targets,
    k: usize,
    tie: TieBreak,
) -> Result<UniformProfile> {
    let cert = equilibrium_exists(norm, targets, k)?;
    if !cert.exists {
        return Err(Error::Precondition(format!(
            "no equilibrium at index {k}: margins ({}, {}), feasible indices [{}, {}]",
            cert.c1, cert.c2, cert.kmin, cert.kmax
        )));
    }
    let (mu1, mu2, window) = multiplier_system(norm, targets, k, tie);
    match solve_two_var(&mu1, &mu2, &window)? {
        Some((m1, m2)) => UniformProfile::new(m1, m2),
        None => Err(Error::Invariant(format!(
            "existence certified at index {k} but the multiplier system is infeasible"
        ))),
    }
}
