//! Independent checking paths for the uniform-equilibrium solver.
//!
//! [`raw_condition_feasible`] decides whether allocation index `k` supports an
//! equilibrium by assembling the six defining inequalities *directly* as
//! multiplier bounds and running interval elimination — no existence margins,
//! no index-bound shortcuts. [`crosscheck_uniform`] plays that against the
//! closed-form [`equilibrium_exists`] for every index and both tie-break
//! rules, and also validates every witness the raw path produces against the
//! condition ledger. Any disagreement is reported with its full evidence.

use crate::error::Result;
use crate::feasibility::{solve_two_var, FeasibilityInterval, RatioWindow};
use crate::model::{NormalizedInstance, Targets, TieBreak};
use crate::rational::Rat;
use crate::uniform::{
    check_conditions, equilibrium_exists, ExistenceCertificate, UniformProfile,
};

use num::{One, Zero};

/// Decides feasibility of the six equilibrium conditions at index `k` straight
/// from their inequality forms, returning a witness multiplier pair when
/// feasible.
pub fn raw_condition_feasible(
    norm: &NormalizedInstance,
    targets: &Targets,
    k: usize,
    tie: TieBreak,
) -> Result<(bool, Option<UniformProfile>)> {
    let n = norm.queries();
    let (t1, t2) = (targets.get(0), targets.get(1));
    let value = |i: usize, p: usize| norm.instance().value(i, p - 1);

    // Undominatedness: μ1 ≥ 1 and μ2 ≥ 1.
    let mut mu1 = FeasibilityInterval::positive();
    mu1.tighten_lower(Rat::one(), false);
    let mut mu2 = FeasibilityInterval::positive();
    mu2.tighten_lower(Rat::one(), false);

    // Bidder 1's budget: μ2·T2·V2(L_k) ≤ T1·V1(L_k); trivial at k = 0.
    if k >= 1 {
        mu2.tighten_upper(t1 * norm.prefix_value(0, k) / (t2 * norm.prefix_value(1, k)), false);
    }
    // Bidder 2's budget: μ1·T1·V1(R_{k+1}) ≤ T2·V2(R_{k+1}); trivial at k = n.
    if k < n {
        mu1.tighten_upper(
            t2 * norm.suffix_value(1, k + 1) / (t1 * norm.suffix_value(0, k + 1)),
            false,
        );
    }
    // Bidder 1 priced out of query k+1: μ2·T2·V2(L_{k+1}) > T1·V1(L_{k+1}); vacuous at k = n.
    if k < n {
        mu2.tighten_lower(t1 * norm.prefix_value(0, k + 1) / (t2 * norm.prefix_value(1, k + 1)), true);
    }
    // Bidder 2 priced out of query k: μ1·T1·V1(R_k) > T2·V2(R_k); vacuous at k = 0.
    if k >= 1 {
        mu1.tighten_lower(t2 * norm.suffix_value(1, k) / (t1 * norm.suffix_value(0, k)), true);
    }

    // Allocation window. Upper side (query k goes to bidder 1):
    // μ1·T1·v_{1,k} ≥ μ2·T2·v_{2,k}, strict under Bidder2Wins; absent at k = 0
    // where the virtual ratio is infinite. Lower side (query k+1 goes to
    // bidder 2): μ2·T2·v_{2,k+1} > μ1·T1·v_{1,k+1}, weak under Bidder2Wins;
    // coefficient 0 at k = n where the virtual ratio vanishes.
    let (upper_strict, lower_strict) = match tie {
        TieBreak::Bidder1Wins => (false, true),
        TieBreak::Bidder2Wins => (true, false),
    };
    let window = RatioWindow {
        lower: Some(if k == n {
            (Rat::zero(), lower_strict)
        } else {
            (t1 * value(0, k + 1) / (t2 * value(1, k + 1)), lower_strict)
        }),
        upper: (k >= 1).then(|| (t1 * value(0, k) / (t2 * value(1, k)), upper_strict)),
    };

    match solve_two_var(&mu1, &mu2, &window)? {
        Some((m1, m2)) => Ok((true, Some(UniformProfile::new(m1, m2)?))),
        None => Ok((false, None)),
    }
}

/// Agreement record for one allocation index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KAgreement {
    pub k: usize,
    /// Verdict of the closed-form existence test (tie-break independent).
    pub closed_form: bool,
    /// Raw feasibility with ties to bidder 1 / bidder 2.
    pub raw_tie1: bool,
    pub raw_tie2: bool,
    /// Every raw witness passed the full condition ledger.
    pub witnesses_valid: bool,
    pub agree: bool,
}

/// Evidence payload for a disagreement at one index.
#[derive(Clone, Debug)]
pub struct Disagreement {
    pub certificate: ExistenceCertificate,
    pub raw_tie1: bool,
    pub raw_tie2: bool,
    pub detail: String,
}

/// Outcome of playing the closed form against the raw path on one instance.
#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub per_k: Vec<KAgreement>,
    pub all_agree: bool,
    pub disagreements: Vec<Disagreement>,
}

/// Compares closed-form existence with raw feasibility at every allocation
/// index and under both tie-break rules, validating raw witnesses on the way.
pub fn crosscheck_uniform(norm: &NormalizedInstance, targets: &Targets) -> Result<CrosscheckReport> {
    let mut per_k = Vec::new();
    let mut disagreements = Vec::new();
    for k in 0..=norm.queries() {
        let cert = equilibrium_exists(norm, targets, k)?;
        let mut raw = [false; 2];
        let mut witnesses_valid = true;
        let mut detail = Vec::new();
        for (slot, tie) in [TieBreak::Bidder1Wins, TieBreak::Bidder2Wins]
            .into_iter()
            .enumerate()
        {
            let (feasible, witness) = raw_condition_feasible(norm, targets, k, tie)?;
            raw[slot] = feasible;
            if let Some(w) = witness {
                let ledger = check_conditions(norm, targets, &w, k, tie)?;
                if !ledger.all_hold() {
                    witnesses_valid = false;
                    detail.push(format!(
                        "witness ({}, {}) under {tie:?} fails the ledger",
                        w.mu1(),
                        w.mu2()
                    ));
                }
            }
            if feasible != cert.exists {
                detail.push(format!(
                    "raw feasibility {feasible} under {tie:?} vs closed form {}",
                    cert.exists
                ));
            }
        }
        let agree = raw[0] == cert.exists && raw[1] == cert.exists && witnesses_valid;
        if !agree {
            disagreements.push(Disagreement {
                certificate: cert.clone(),
                raw_tie1: raw[0],
                raw_tie2: raw[1],
                detail: detail.join("; "),
            });
        }
        per_k.push(KAgreement {
            k,
            closed_form: cert.exists,
            raw_tie1: raw[0],
            raw_tie2: raw[1],
            witnesses_valid,
            agree,
        });
    }
    Ok(CrosscheckReport {
        all_agree: disagreements.is_empty(),
        per_k,
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Instance;
    use crate::rational::{rat, rat_int};

    fn micro() -> NormalizedInstance {
        let inst = Instance::new(vec![
            vec![rat_int(4), rat_int(1)],
            vec![rat_int(1), rat_int(2)],
        ])
        .unwrap();
        NormalizedInstance::from_instance(&inst).unwrap()
    }

    #[test]
    fn budget_versus_undominated_clashes_are_detected() {
        let norm = micro();
        // k = 0 at targets (1,1): bidder 2's budget forces μ1 ≤ 3/5, but μ1 ≥ 1.
        let t = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let (feasible, witness) =
            raw_condition_feasible(&norm, &t, 0, TieBreak::Bidder1Wins).unwrap();
        assert!(!feasible);
        assert!(witness.is_none());

        // k = 2 at targets (1/2,1): bidder 1's budget forces μ2 ≤ 5/6 < 1.
        let t = Targets::pair(rat(1, 2), rat_int(1)).unwrap();
        let (feasible, _) = raw_condition_feasible(&norm, &t, 2, TieBreak::Bidder1Wins).unwrap();
        assert!(!feasible);
    }

    #[test]
    fn feasible_indices_come_with_ledger_clean_witnesses() {
        let norm = micro();
        let t = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        for k in [1, 2] {
            for tie in [TieBreak::Bidder1Wins, TieBreak::Bidder2Wins] {
                let (feasible, witness) = raw_condition_feasible(&norm, &t, k, tie).unwrap();
                assert!(feasible, "k={k} tie={tie:?}");
                let w = witness.expect("feasible systems yield a witness");
                assert!(check_conditions(&norm, &t, &w, k, tie).unwrap().all_hold());
            }
        }
    }

    #[test]
    fn crosscheck_agrees_with_the_closed_form_on_the_micro_instance() {
        let norm = micro();
        for (t1, t2) in [(rat_int(1), rat_int(1)), (rat(1, 2), rat_int(1))] {
            let t = Targets::pair(t1, t2).unwrap();
            let report = crosscheck_uniform(&norm, &t).unwrap();
            assert!(report.all_agree, "{:?}", report.disagreements);
            assert_eq!(report.per_k.len(), 3);
            assert!(report.per_k.iter().all(|row| row.agree));
        }
    }
}
