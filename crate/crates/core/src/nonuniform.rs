//! Arbitrary (non-uniform) bid profiles: second-price outcomes, exact
//! equilibrium verification, and the report-shift constructions.
//!
//! The verifier is deliberately brute force — it is the ground truth the rest
//! of the crate is audited against. A bidder's possible deviations decompose
//! exactly: it always wins its *forced* queries (where even the minimum viable
//! bid wins), it can win any query not locked by a rival's infinite bid, and in
//! a second-price auction the cost of a won query never depends on the
//! winner's own bid. So enumerating the win-sets between those two extremes,
//! checking strict value gain and the tCPA budget, decides stability exactly.

use crate::error::{Error, Result};
use crate::model::{Allocation, Instance, Targets, TieBreak};
use crate::rational::{ExtRat, Rat};
use crate::uniform::UniformProfile;
use crate::NormalizedInstance;

/// Default cap on the query count for exhaustive deviation enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 12;

/// An `m × n` matrix of bids; `+inf` bids "win this query unconditionally".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidProfile {
    bids: Vec<Vec<ExtRat>>,
}

impl BidProfile {
    pub fn new(bids: Vec<Vec<ExtRat>>) -> Result<Self> {
        let m = bids.len();
        if m < 2 {
            return Err(Error::InvalidInput(format!(
                "need at least 2 bidders, got {m}"
            )));
        }
        let n = bids[0].len();
        if n == 0 {
            return Err(Error::InvalidInput("need at least 1 query".into()));
        }
        for (i, row) in bids.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "bidder {i} has {} bids, expected {n}",
                    row.len()
                )));
            }
            for (j, b) in row.iter().enumerate() {
                if !b.is_positive() {
                    return Err(Error::InvalidInput(format!(
                        "bid of bidder {i} on query {j} must be positive"
                    )));
                }
            }
        }
        Ok(BidProfile { bids })
    }

    /// The bids induced by uniform multipliers: `b_{i,j} = μ_i · T_i · v_{i,j}`.
    ///
    /// A multiplier pair certified by the uniform-bidding conditions resists
    /// deviations to *other multipliers* (which shift the split point), but
    /// its expansion is not automatically stable against arbitrary per-query
    /// bid vectors: a rival may profitably swap one won query for another.
    /// Run the expansion through [`verify_equilibrium`] when stability
    /// against unrestricted deviations is required.
    pub fn from_uniform(
        norm: &NormalizedInstance,
        targets: &Targets,
        profile: &UniformProfile,
    ) -> BidProfile {
        let scale = [
            profile.mu1() * targets.get(0),
            profile.mu2() * targets.get(1),
        ];
        let bids = (0..2)
            .map(|i| {
                (0..norm.queries())
                    .map(|j| ExtRat::Finite(&scale[i] * norm.instance().value(i, j)))
                    .collect()
            })
            .collect();
        BidProfile { bids }
    }

    pub fn bidders(&self) -> usize {
        self.bids.len()
    }

    pub fn queries(&self) -> usize {
        self.bids[0].len()
    }

    pub fn bid(&self, bidder: usize, query: usize) -> &ExtRat {
        &self.bids[bidder][query]
    }

    pub fn rows(&self) -> &[Vec<ExtRat>] {
        &self.bids
    }
}

/// Result of running the auction: who won each query and at what price.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub allocation: Allocation,
    /// `costs[j]` is what the winner of query `j` pays: the highest rival bid.
    pub costs: Vec<Rat>,
}

/// One bidder's verdict: budget compliance (with the exact spend/budget pair)
/// and stability (with a profitable affordable deviation as evidence when
/// unstable).
#[derive(Clone, Debug, PartialEq)]
pub struct BidderVerdict {
    pub tcpa_ok: bool,
    pub spend: Rat,
    pub budget: Rat,
    pub stable: bool,
    /// Queries of a win-set the bidder strictly prefers and can afford.
    pub improving_set: Option<Vec<usize>>,
}

/// Full equilibrium verdict for a bid profile.
#[derive(Clone, Debug, PartialEq)]
pub struct EquilibriumVerdict {
    pub outcome: Outcome,
    pub bidders: Vec<BidderVerdict>,
    pub is_equilibrium: bool,
}

/// Winner of one query's bid column under the tie-break rule; errs if two
/// bidders both bid `+inf` (no second price exists).
fn query_winner(column: &[&ExtRat], tie: TieBreak, query: usize) -> Result<usize> {
    let infinite = column.iter().filter(|b| !b.is_finite()).count();
    if infinite >= 2 {
        return Err(Error::IllFormedProfile(format!(
            "{infinite} infinite bids on query {query}"
        )));
    }
    let mut winner = 0;
    for (i, bid) in column.iter().enumerate().skip(1) {
        if *bid > column[winner] || (*bid == column[winner] && tie.beats(i, winner)) {
            winner = i;
        }
    }
    Ok(winner)
}

/// Runs the single-slot second-price auction on every query: highest bid wins
/// (ties per `tie`), the winner pays the highest rival bid.
pub fn spa_outcome(instance: &Instance, profile: &BidProfile, tie: TieBreak) -> Result<Outcome> {
    if profile.bidders() != instance.bidders() || profile.queries() != instance.queries() {
        return Err(Error::InvalidInput(format!(
            "bid profile is {}×{}, instance is {}×{}",
            profile.bidders(),
            profile.queries(),
            instance.bidders(),
            instance.queries()
        )));
    }
    let (m, n) = (instance.bidders(), instance.queries());
    let mut winners = Vec::with_capacity(n);
    let mut costs = Vec::with_capacity(n);
    for j in 0..n {
        let column: Vec<&ExtRat> = (0..m).map(|i| profile.bid(i, j)).collect();
        let w = query_winner(&column, tie, j)?;
        let price = (0..m)
            .filter(|&i| i != w)
            .map(|i| profile.bid(i, j))
            .max()
            .expect("at least two bidders");
        match price.finite() {
            Some(p) => costs.push(p.clone()),
            None => unreachable!("runner-up bid is finite when the column is well-formed"),
        }
        winners.push(w);
    }
    Ok(Outcome {
        allocation: Allocation::new(winners, m)?,
        costs,
    })
}

/// Verifies that every finite bid is at least the bidder's minimum viable bid
/// `T_i · v_{i,j}` (bids below it are dominated and outside the profile space).
fn check_undominated(instance: &Instance, targets: &Targets, profile: &BidProfile) -> Result<()> {
    for i in 0..instance.bidders() {
        for j in 0..instance.queries() {
            if let ExtRat::Finite(b) = profile.bid(i, j) {
                if *b < targets.get(i) * instance.value(i, j) {
                    return Err(Error::Precondition(format!(
                        "bid of bidder {i} on query {j} is below its minimum viable bid"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Decides exactly whether `profile` is an auto-bidder equilibrium: every
/// bidder meets its tCPA budget, and no bidder has a deviation that strictly
/// increases its won value while staying within budget.
///
/// Deviation search enumerates all reachable win-sets per bidder (forced
/// queries plus any subset of the queries not locked by rival `+inf` bids), so
/// `n` is capped (`cap`, at most ~20 is practical; the conventional default is
/// [`DEFAULT_ENUMERATION_CAP`]).
pub fn verify_equilibrium(
    instance: &Instance,
    targets: &Targets,
    profile: &BidProfile,
    tie: TieBreak,
    cap: usize,
) -> Result<EquilibriumVerdict> {
    let (m, n) = (instance.bidders(), instance.queries());
    if n > cap {
        return Err(Error::CapExceeded { queries: n, cap });
    }
    if targets.len() != m {
        return Err(Error::InvalidInput(format!(
            "{} targets for {m} bidders",
            targets.len()
        )));
    }
    check_undominated(instance, targets, profile)?;
    let outcome = spa_outcome(instance, profile, tie)?;

    let mut bidders = Vec::with_capacity(m);
    for i in 0..m {
        let won = outcome.allocation.won_by(i);
        let spend: Rat = won.iter().map(|&j| outcome.costs[j].clone()).sum();
        let value: Rat = won.iter().map(|&j| instance.value(i, j).clone()).sum();
        let budget = targets.get(i) * &value;
        let tcpa_ok = spend <= budget;

        // Highest rival bid per query: the price i would pay, and the bar its
        // minimum bid must clear for the query to be forced.
        let rival_max: Vec<&ExtRat> = (0..n)
            .map(|j| {
                (0..m)
                    .filter(|&r| r != i)
                    .map(|r| profile.bid(r, j))
                    .max()
                    .expect("at least two bidders")
            })
            .collect();
        let mut forced = Vec::new();
        let mut optional = Vec::new();
        for (j, rival_bid) in rival_max.iter().enumerate() {
            let ExtRat::Finite(rival) = rival_bid else {
                continue; // locked by a rival's infinite bid
            };
            let min_bid = targets.get(i) * instance.value(i, j);
            let wins_at_min = min_bid > *rival
                || (min_bid == *rival && {
                    // Replay the tie among i (at its minimum bid) and the rivals.
                    let tied_rival = (0..m)
                        .filter(|&r| r != i && *profile.bid(r, j) == *rival)
                        .find(|&r| !tie.beats(i, r));
                    tied_rival.is_none()
                });
            if wins_at_min {
                forced.push(j);
            } else {
                optional.push(j);
            }
        }

        let forced_value: Rat = forced.iter().map(|&j| instance.value(i, j).clone()).sum();
        let forced_cost: Rat = forced
            .iter()
            .map(|&j| rival_max[j].finite().expect("forced queries are unlocked").clone())
            .sum();

        let mut improving_set = None;
        'masks: for mask in 0u64..(1u64 << optional.len()) {
            let mut dev_value = forced_value.clone();
            let mut dev_cost = forced_cost.clone();
            for (bit, &j) in optional.iter().enumerate() {
                if mask & (1u64 << bit) != 0 {
                    dev_value += instance.value(i, j);
                    dev_cost += rival_max[j].finite().expect("optional queries are unlocked");
                }
            }
            if dev_value > value && dev_cost <= targets.get(i) * &dev_value {
                let mut set = forced.clone();
                set.extend(
                    optional
                        .iter()
                        .enumerate()
                        .filter(|(bit, _)| mask & (1u64 << *bit) != 0)
                        .map(|(_, &j)| j),
                );
                set.sort_unstable();
                improving_set = Some(set);
                break 'masks;
            }
        }

        bidders.push(BidderVerdict {
            tcpa_ok,
            spend,
            budget,
            stable: improving_set.is_none(),
            improving_set,
        });
    }

    let is_equilibrium = bidders.iter().all(|b| b.tcpa_ok && b.stable);
    Ok(EquilibriumVerdict {
        outcome,
        bidders,
        is_equilibrium,
    })
}

/// The strongest rival of bidder 0 on query `j` at minimum viable bids:
/// `argmax_{i ≥ 1} T_i · v_{i,j}`, lowest index on ties.
fn strongest_rival(instance: &Instance, targets: &Targets, j: usize) -> usize {
    let mut best = 1;
    let mut best_bid = targets.get(1) * instance.value(1, j);
    for i in 2..instance.bidders() {
        let bid = targets.get(i) * instance.value(i, j);
        if bid > best_bid {
            best = i;
            best_bid = bid;
        }
    }
    best
}

/// Given an equilibrium at targets `targets`, builds an equilibrium for the
/// profile where bidder 0 *lowers* its target to `t1_new < T_1`, in which
/// bidder 0 wins only a subset of what it won before.
///
/// Queries bidder 0 was losing stay with their winner (now locked by an
/// infinite bid, prices unchanged). On queries bidder 0 was winning, it either
/// still dominates its strongest rival at the lowered target — then it locks
/// the query and everyone else drops to minimum viable bids — or it cannot,
/// and the strongest rival locks the query instead with everyone else
/// (bidder 0 included, at its new target) at minimum viable bids.
pub fn construct_lower_report(
    instance: &Instance,
    targets: &Targets,
    eq_profile: &BidProfile,
    t1_new: &Rat,
    tie: TieBreak,
    cap: usize,
) -> Result<(BidProfile, Outcome)> {
    if *t1_new >= *targets.get(0) {
        return Err(Error::Precondition(format!(
            "lowered target must be below the current one, got {t1_new} ≥ {}",
            targets.get(0)
        )));
    }
    let verdict = verify_equilibrium(instance, targets, eq_profile, tie, cap)?;
    if !verdict.is_equilibrium {
        return Err(Error::Precondition(
            "input profile is not an equilibrium at the original targets".into(),
        ));
    }
    let new_targets = targets.with_first(t1_new.clone())?;

    let mut bids: Vec<Vec<ExtRat>> = eq_profile.rows().to_vec();
    for j in 0..instance.queries() {
        let w = verdict.outcome.allocation.winner(j);
        if w != 0 {
            bids[w][j] = ExtRat::Infinite;
            continue;
        }
        let rival = strongest_rival(instance, &new_targets, j);
        let rival_bid = new_targets.get(rival) * instance.value(rival, j);
        let locker = if t1_new * instance.value(0, j) >= rival_bid {
            0 // bidder 0 still dominates at the lowered target
        } else {
            rival
        };
        for (i, row) in bids.iter_mut().enumerate() {
            row[j] = if i == locker {
                ExtRat::Infinite
            } else {
                ExtRat::Finite(new_targets.get(i) * instance.value(i, j))
            };
        }
    }
    let profile = BidProfile::new(bids)?;
    let outcome = spa_outcome(instance, &profile, tie)?;
    Ok((profile, outcome))
}

/// Given an equilibrium at *reported* targets `targets`, builds an equilibrium
/// for bidder 0's true, higher target `t1_true > T_1`, in which bidder 0 wins
/// a superset of what it won before.
///
/// Queries bidder 0 was winning stay locked by bidder 0 at unchanged prices.
/// On queries it was losing, it either dominates its strongest rival at the
/// true target — then the query flips to bidder 0, everyone else at minimum
/// viable bids — or the strongest rival locks the query with everyone else
/// (bidder 0 at its true target) at minimum viable bids.
pub fn construct_higher_report(
    instance: &Instance,
    targets: &Targets,
    eq_profile: &BidProfile,
    t1_true: &Rat,
    tie: TieBreak,
    cap: usize,
) -> Result<(BidProfile, Outcome)> {
    if *t1_true <= *targets.get(0) {
        return Err(Error::Precondition(format!(
            "true target must exceed the reported one, got {t1_true} ≤ {}",
            targets.get(0)
        )));
    }
    let verdict = verify_equilibrium(instance, targets, eq_profile, tie, cap)?;
    if !verdict.is_equilibrium {
        return Err(Error::Precondition(
            "input profile is not an equilibrium at the reported targets".into(),
        ));
    }
    let true_targets = targets.with_first(t1_true.clone())?;

    let mut bids: Vec<Vec<ExtRat>> = eq_profile.rows().to_vec();
    for j in 0..instance.queries() {
        if verdict.outcome.allocation.winner(j) == 0 {
            bids[0][j] = ExtRat::Infinite;
            continue;
        }
        let rival = strongest_rival(instance, &true_targets, j);
        let rival_bid = true_targets.get(rival) * instance.value(rival, j);
        let locker = if t1_true * instance.value(0, j) >= rival_bid {
            0 // the true target is enough to take this query over
        } else {
            rival
        };
        for (i, row) in bids.iter_mut().enumerate() {
            row[j] = if i == locker {
                ExtRat::Infinite
            } else {
                ExtRat::Finite(true_targets.get(i) * instance.value(i, j))
            };
        }
    }
    let profile = BidProfile::new(bids)?;
    let outcome = spa_outcome(instance, &profile, tie)?;
    Ok((profile, outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn inst(rows: &[&[i64]]) -> Instance {
        Instance::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn micro() -> Instance {
        inst(&[&[4, 1], &[1, 2]])
    }

    fn bids(rows: &[&[ExtRat]]) -> BidProfile {
        BidProfile::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn fin(n: i64, d: i64) -> ExtRat {
        ExtRat::Finite(rat(n, d))
    }

    fn inf() -> ExtRat {
        ExtRat::Infinite
    }

    fn cap() -> usize {
        DEFAULT_ENUMERATION_CAP
    }

    #[test]
    fn highest_bid_wins_and_pays_the_runner_up() {
        let profile = bids(&[&[fin(12, 1), fin(3, 1)], &[fin(1, 1), fin(2, 1)]]);
        let outcome = spa_outcome(&micro(), &profile, TieBreak::Bidder1Wins).unwrap();
        assert_eq!(outcome.allocation.winners(), &[0, 0]);
        assert_eq!(outcome.costs, vec![rat_int(1), rat_int(2)]);
    }

    #[test]
    fn tied_top_bids_follow_the_tie_break_rule() {
        let profile = bids(&[&[fin(4, 1), fin(1, 1)], &[fin(4, 1), fin(2, 1)]]);
        let b1 = spa_outcome(&micro(), &profile, TieBreak::Bidder1Wins).unwrap();
        assert_eq!(b1.allocation.winners(), &[0, 1]);
        assert_eq!(b1.costs[0], rat_int(4));
        let b2 = spa_outcome(&micro(), &profile, TieBreak::Bidder2Wins).unwrap();
        assert_eq!(b2.allocation.winners(), &[1, 1]);
    }

    #[test]
    fn infinite_bids_win_at_the_highest_finite_price() {
        let profile = bids(&[&[inf(), fin(1, 1)], &[fin(5, 1), fin(2, 1)]]);
        let outcome = spa_outcome(&micro(), &profile, TieBreak::Bidder1Wins).unwrap();
        assert_eq!(outcome.allocation.winners(), &[0, 1]);
        assert_eq!(outcome.costs[0], rat_int(5));
    }

    #[test]
    fn two_infinite_bids_on_one_query_are_rejected() {
        let profile = bids(&[&[inf(), fin(1, 1)], &[inf(), fin(2, 1)]]);
        let err = spa_outcome(&micro(), &profile, TieBreak::Bidder1Wins);
        assert!(matches!(err, Err(Error::IllFormedProfile(_))));
    }

    #[test]
    fn uniform_multipliers_expand_to_scaled_value_bids() {
        let norm = NormalizedInstance::from_instance(&micro()).unwrap();
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let mu = UniformProfile::new(rat_int(3), rat_int(1)).unwrap();
        let profile = BidProfile::from_uniform(&norm, &targets, &mu);
        assert_eq!(
            profile,
            bids(&[&[fin(12, 1), fin(3, 1)], &[fin(1, 1), fin(2, 1)]])
        );
    }

    #[test]
    fn a_priced_out_rival_certifies_an_equilibrium() {
        // Uniform (3,1) bids on the micro-instance: bidder 0 takes everything;
        // bidder 1 would pay 3 for its value-2 query and 12 for its value-1 one.
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let profile = bids(&[&[fin(12, 1), fin(3, 1)], &[fin(1, 1), fin(2, 1)]]);
        let verdict =
            verify_equilibrium(&micro(), &targets, &profile, TieBreak::Bidder1Wins, cap()).unwrap();
        assert!(verdict.is_equilibrium, "{verdict:?}");
        assert!(verdict.bidders.iter().all(|b| b.tcpa_ok && b.stable));
    }

    #[test]
    fn bidder_two_can_hold_the_whole_instance_too() {
        let targets = Targets::pair(rat(1, 2), rat_int(1)).unwrap();
        let profile = bids(&[&[fin(2, 1), fin(1, 2)], &[fin(5, 2), fin(5, 1)]]);
        let verdict =
            verify_equilibrium(&micro(), &targets, &profile, TieBreak::Bidder1Wins, cap()).unwrap();
        assert!(verdict.is_equilibrium, "{verdict:?}");
        assert_eq!(verdict.outcome.allocation.winners(), &[1, 1]);
        assert_eq!(verdict.outcome.costs, vec![rat_int(2), rat(1, 2)]);
    }

    #[test]
    fn aggregate_slack_funds_a_profitable_grab() {
        // Minimum viable bids everywhere: bidder 0 banks slack on query 0
        // (cost 1, budget 4) and can afford to also take query 1 at cost 2.
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let profile = bids(&[&[fin(4, 1), fin(1, 1)], &[fin(1, 1), fin(2, 1)]]);
        let verdict =
            verify_equilibrium(&micro(), &targets, &profile, TieBreak::Bidder1Wins, cap()).unwrap();
        assert!(!verdict.is_equilibrium);
        assert!(!verdict.bidders[0].stable);
        assert_eq!(verdict.bidders[0].improving_set, Some(vec![0, 1]));
        assert!(verdict.bidders[1].stable);
    }

    #[test]
    fn the_same_bids_can_break_under_the_other_tie_rule() {
        // Bidder 1 matches the top bid on query 0. Ties to bidder 0: stable
        // equilibrium. Ties to bidder 1: it wins both queries and blows its
        // budget (spend 5, budget 3).
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let profile = bids(&[&[fin(4, 1), fin(1, 1)], &[fin(4, 1), fin(2, 1)]]);
        let first =
            verify_equilibrium(&micro(), &targets, &profile, TieBreak::Bidder1Wins, cap()).unwrap();
        assert!(first.is_equilibrium, "{first:?}");
        let second =
            verify_equilibrium(&micro(), &targets, &profile, TieBreak::Bidder2Wins, cap()).unwrap();
        assert!(!second.is_equilibrium);
        assert!(!second.bidders[1].tcpa_ok);
        assert_eq!(second.bidders[1].spend, rat_int(5));
        assert_eq!(second.bidders[1].budget, rat_int(3));
    }

    #[test]
    fn dominated_bids_are_a_precondition_failure() {
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let profile = bids(&[&[fin(3, 1), fin(1, 1)], &[fin(1, 1), fin(2, 1)]]);
        let err = verify_equilibrium(&micro(), &targets, &profile, TieBreak::Bidder1Wins, cap());
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn the_enumeration_cap_is_enforced() {
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let profile = bids(&[&[fin(4, 1), fin(1, 1)], &[fin(1, 1), fin(2, 1)]]);
        let err = verify_equilibrium(&micro(), &targets, &profile, TieBreak::Bidder1Wins, 1);
        assert!(matches!(err, Err(Error::CapExceeded { queries: 2, cap: 1 })));
    }

    #[test]
    fn lowering_the_target_shrinks_the_win_set_case_by_case() {
        // At targets (1,1) bidder 0 holds both queries with uniform (3,1) bids.
        // Halving its target keeps query 0 (2 ≥ 1) but cedes query 1 (1/2 < 2).
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let eq = bids(&[&[fin(12, 1), fin(3, 1)], &[fin(1, 1), fin(2, 1)]]);
        let (profile, outcome) = construct_lower_report(
            &micro(),
            &targets,
            &eq,
            &rat(1, 2),
            TieBreak::Bidder1Wins,
            cap(),
        )
        .unwrap();
        assert_eq!(
            profile,
            bids(&[&[inf(), fin(1, 2)], &[fin(1, 1), inf()]])
        );
        assert_eq!(outcome.allocation.winners(), &[0, 1]);
        assert_eq!(outcome.costs, vec![rat_int(1), rat(1, 2)]);

        let lowered = targets.with_first(rat(1, 2)).unwrap();
        let verdict =
            verify_equilibrium(&micro(), &lowered, &profile, TieBreak::Bidder1Wins, cap()).unwrap();
        assert!(verdict.is_equilibrium, "{verdict:?}");
    }

    #[test]
    fn raising_the_target_grows_the_win_set_case_by_case() {
        // At reported targets (1/2,1) bidder 1 holds everything. With the true
        // target 1, query 0 flips to bidder 0 (4 ≥ 1), query 1 stays (1 < 2).
        let reported = Targets::pair(rat(1, 2), rat_int(1)).unwrap();
        let eq = bids(&[&[fin(2, 1), fin(1, 2)], &[fin(5, 2), fin(5, 1)]]);
        let (profile, outcome) = construct_higher_report(
            &micro(),
            &reported,
            &eq,
            &rat_int(1),
            TieBreak::Bidder1Wins,
            cap(),
        )
        .unwrap();
        assert_eq!(
            profile,
            bids(&[&[inf(), fin(1, 1)], &[fin(1, 1), inf()]])
        );
        assert_eq!(outcome.allocation.winners(), &[0, 1]);
        assert_eq!(outcome.costs, vec![rat_int(1), rat_int(1)]);

        let truth = reported.with_first(rat_int(1)).unwrap();
        let verdict =
            verify_equilibrium(&micro(), &truth, &profile, TieBreak::Bidder1Wins, cap()).unwrap();
        assert!(verdict.is_equilibrium, "{verdict:?}");
    }

    #[test]
    fn a_bidder_winning_nothing_keeps_its_bids_under_a_lower_report() {
        let targets = Targets::pair(rat(1, 2), rat_int(1)).unwrap();
        let eq = bids(&[&[fin(2, 1), fin(1, 2)], &[fin(5, 2), fin(5, 1)]]);
        let (profile, outcome) = construct_lower_report(
            &micro(),
            &targets,
            &eq,
            &rat(1, 4),
            TieBreak::Bidder1Wins,
            cap(),
        )
        .unwrap();
        // Bidder 0 lost everywhere, so only the winners' locks change.
        assert_eq!(profile, bids(&[&[fin(2, 1), fin(1, 2)], &[inf(), inf()]]));
        assert_eq!(outcome.allocation.winners(), &[1, 1]);
        assert_eq!(outcome.costs, vec![rat_int(2), rat(1, 2)]);
    }

    #[test]
    fn constructions_demand_a_genuine_equilibrium_and_a_real_shift() {
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let not_eq = bids(&[&[fin(4, 1), fin(1, 1)], &[fin(1, 1), fin(2, 1)]]);
        let err = construct_lower_report(
            &micro(),
            &targets,
            &not_eq,
            &rat(1, 2),
            TieBreak::Bidder1Wins,
            cap(),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));

        let eq = bids(&[&[fin(12, 1), fin(3, 1)], &[fin(1, 1), fin(2, 1)]]);
        let err = construct_lower_report(
            &micro(),
            &targets,
            &eq,
            &rat_int(1),
            TieBreak::Bidder1Wins,
            cap(),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
        let err = construct_higher_report(
            &micro(),
            &targets,
            &eq,
            &rat(1, 2),
            TieBreak::Bidder1Wins,
            cap(),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn three_bidder_outcomes_and_verdicts_work() {
        let instance = inst(&[&[2, 3], &[4, 1], &[1, 5]]);
        let targets = Targets::new(vec![rat_int(1), rat_int(1), rat_int(1)]).unwrap();
        // Each query locked by its strongest bidder at minimum viable rival bids.
        let profile = bids(&[
            &[fin(2, 1), fin(3, 1)],
            &[inf(), fin(1, 1)],
            &[fin(1, 1), inf()],
        ]);
        let verdict =
            verify_equilibrium(&instance, &targets, &profile, TieBreak::Bidder1Wins, cap())
                .unwrap();
        assert!(verdict.is_equilibrium, "{verdict:?}");
        assert_eq!(verdict.outcome.allocation.winners(), &[1, 2]);
        assert_eq!(verdict.outcome.costs, vec![rat_int(2), rat_int(3)]);
    }
}
