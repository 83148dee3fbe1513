//! Auction model: instances, targets, allocations, and the ratio-sorted
//! two-bidder normal form that the equilibrium theory is stated in.
//!
//! A two-bidder instance is *normalized* when its queries are sorted by the
//! value ratio `v1/v2` in strictly decreasing order; queries with equal ratios
//! are merged component-wise (they are interchangeable to both bidders, so the
//! merge preserves every quantity the solvers compute). Prefix allocations and
//! all the equilibrium machinery are defined on this normal form.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{ExtRat, Rat};

/// Tie-break rule when the highest bid on a query is shared.
///
/// `Bidder1Wins` awards ties to the lowest bidder index, `Bidder2Wins` to the
/// highest; for two bidders these are exactly "bidder 1 wins" / "bidder 2 wins".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Bidder1Wins,
    Bidder2Wins,
}

impl TieBreak {
    /// Does bidder `i` beat bidder `j` when their bids tie?
    pub fn beats(self, i: usize, j: usize) -> bool {
        match self {
            TieBreak::Bidder1Wins => i < j,
            TieBreak::Bidder2Wins => i > j,
        }
    }
}

/// An `m × n` matrix of positive query values, `value(i, j)` being bidder `i`'s
/// value for query `j`. Requires `m ≥ 2` and `n ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    values: Vec<Vec<Rat>>,
}

impl Instance {
    pub fn new(values: Vec<Vec<Rat>>) -> Result<Self> {
        let m = values.len();
        if m < 2 {
            return Err(Error::InvalidInput(format!(
                "need at least 2 bidders, got {m}"
            )));
        }
        let n = values[0].len();
        if n == 0 {
            return Err(Error::InvalidInput("need at least 1 query".into()));
        }
        for (i, row) in values.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "bidder {i} has {} values, expected {n}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                if !v.is_positive() {
                    return Err(Error::InvalidInput(format!(
                        "value of bidder {i} for query {j} must be positive"
                    )));
                }
            }
        }
        Ok(Instance { values })
    }

    /// Number of bidders `m`.
    pub fn bidders(&self) -> usize {
        self.values.len()
    }

    /// Number of queries `n`.
    pub fn queries(&self) -> usize {
        self.values[0].len()
    }

    /// Bidder `i`'s value for query `j` (both 0-based).
    pub fn value(&self, bidder: usize, query: usize) -> &Rat {
        &self.values[bidder][query]
    }

    pub fn row(&self, bidder: usize) -> &[Rat] {
        &self.values[bidder]
    }
}

/// Positive per-bidder tCPA targets.
#[derive(Clone, Debug, PartialEq)]
pub struct Targets {
    targets: Vec<Rat>,
}

impl Targets {
    pub fn new(targets: Vec<Rat>) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::InvalidInput("need at least one target".into()));
        }
        for (i, t) in targets.iter().enumerate() {
            if !t.is_positive() {
                return Err(Error::InvalidInput(format!(
                    "target of bidder {i} must be positive"
                )));
            }
        }
        Ok(Targets { targets })
    }

    pub fn pair(t1: Rat, t2: Rat) -> Result<Self> {
        Targets::new(vec![t1, t2])
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn get(&self, bidder: usize) -> &Rat {
        &self.targets[bidder]
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.targets
    }

    /// A copy with bidder 0's target replaced (the "re-reporting" operation).
    pub fn with_first(&self, t: Rat) -> Result<Self> {
        let mut targets = self.targets.clone();
        targets[0] = t;
        Targets::new(targets)
    }
}

/// Which bidder wins each query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Allocation {
    winner: Vec<usize>,
}

impl Allocation {
    pub fn new(winner: Vec<usize>, bidders: usize) -> Result<Self> {
        if let Some(w) = winner.iter().find(|w| **w >= bidders) {
            return Err(Error::InvalidInput(format!(
                "winner index {w} out of range for {bidders} bidders"
            )));
        }
        Ok(Allocation { winner })
    }

    /// The prefix allocation at split `k`: bidder 0 wins the first `k` of `n`
    /// queries, bidder 1 wins the rest.
    pub fn from_prefix(k: usize, n: usize) -> Self {
        Allocation {
            winner: (0..n).map(|j| usize::from(j >= k)).collect(),
        }
    }

    pub fn winner(&self, query: usize) -> usize {
        self.winner[query]
    }

    pub fn winners(&self) -> &[usize] {
        &self.winner
    }

    /// Queries won by `bidder`, ascending.
    pub fn won_by(&self, bidder: usize) -> Vec<usize> {
        (0..self.winner.len())
            .filter(|&j| self.winner[j] == bidder)
            .collect()
    }
}

/// Sorts a two-bidder instance into ratio order and merges equal-ratio queries
/// component-wise; instances with more than two bidders pass through unchanged.
///
/// Returns the (possibly) rewritten instance together with a trace: entry `j`
/// lists the raw query indices that were fused into normalized query `j`, so
/// downstream results can be mapped back onto the caller's original indexing.
pub fn normalize_instance(raw: &Instance) -> (Instance, Vec<Vec<usize>>) {
    if raw.bidders() != 2 {
        let trace = (0..raw.queries()).map(|j| vec![j]).collect();
        return (raw.clone(), trace);
    }
    let n = raw.queries();
    let ratio = |j: usize| raw.value(0, j) / raw.value(1, j);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&q| std::cmp::Reverse(ratio(q)));

    let mut rows = vec![Vec::new(), Vec::new()];
    let mut trace: Vec<Vec<usize>> = Vec::new();
    for &j in &order {
        let same_ratio = trace
            .last()
            .is_some_and(|group| ratio(group[0]) == ratio(j));
        if same_ratio {
            let last = rows[0].len() - 1;
            rows[0][last] += raw.value(0, j);
            rows[1][last] += raw.value(1, j);
            trace.last_mut().unwrap().push(j);
        } else {
            rows[0].push(raw.value(0, j).clone());
            rows[1].push(raw.value(1, j).clone());
            trace.push(vec![j]);
        }
    }
    let instance = Instance::new(rows).expect("normalization preserves validity");
    (instance, trace)
}

/// A two-bidder instance in normal form, with prefix sums precomputed.
///
/// Query *positions* are 1-based here (position `p` is the `p`-th query in
/// ratio order); positions `0` and `n+1` are virtual sentinels whose ratios are
/// `+inf` and `0`. The sentinels bracket every feasible multiplier ratio but
/// never contribute value.
#[derive(Clone, Debug)]
pub struct NormalizedInstance {
    instance: Instance,
    trace: Vec<Vec<usize>>,
    /// `prefix[i][k]` = total value of bidder `i` over the first `k` queries.
    prefix: [Vec<Rat>; 2],
}

impl NormalizedInstance {
    pub fn from_instance(raw: &Instance) -> Result<Self> {
        if raw.bidders() != 2 {
            return Err(Error::Unsupported(format!(
                "normal form requires exactly 2 bidders, got {}",
                raw.bidders()
            )));
        }
        let (instance, trace) = normalize_instance(raw);
        let n = instance.queries();
        let mut prefix = [vec![Rat::zero()], vec![Rat::zero()]];
        for (i, sums) in prefix.iter_mut().enumerate() {
            for j in 0..n {
                let next = &sums[j] + instance.value(i, j);
                sums.push(next);
            }
        }
        Ok(NormalizedInstance {
            instance,
            trace,
            prefix,
        })
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    /// Maps each normalized query back to the raw indices merged into it.
    pub fn trace(&self) -> &[Vec<usize>] {
        &self.trace
    }

    pub fn queries(&self) -> usize {
        self.instance.queries()
    }

    /// Value ratio `v1/v2` at position `p ∈ [0, n+1]`, with the virtual
    /// sentinels completing the strictly decreasing chain at `+inf` and `0`.
    pub fn ratio(&self, p: usize) -> ExtRat {
        let n = self.queries();
        debug_assert!(p <= n + 1, "ratio position out of range");
        if p == 0 {
            ExtRat::Infinite
        } else if p == n + 1 {
            ExtRat::zero()
        } else {
            ExtRat::Finite(self.instance.value(0, p - 1) / self.instance.value(1, p - 1))
        }
    }

    /// `V_i(L_k)`: bidder `i`'s total value over the first `k` queries.
    /// `k = n+1` is allowed and counts only the `n` real queries.
    pub fn prefix_value(&self, bidder: usize, k: usize) -> Rat {
        let n = self.queries();
        debug_assert!(k <= n + 1, "prefix length out of range");
        self.prefix[bidder][k.min(n)].clone()
    }

    /// `V_i(R_k)`: bidder `i`'s total value from position `k` to the end
    /// (inclusive of position `k`). `k = 0` covers all real queries; `k = n+1`
    /// is the empty suffix.
    pub fn suffix_value(&self, bidder: usize, k: usize) -> Rat {
        let n = self.queries();
        debug_assert!(k <= n + 1, "suffix start out of range");
        let total = &self.prefix[bidder][n];
        total - &self.prefix[bidder][k.saturating_sub(1).min(n)]
    }

    /// Both partial sums at once, with the position range checked.
    pub fn prefix_suffix_sums(&self, bidder: usize, k: usize) -> Result<(Rat, Rat)> {
        if bidder >= 2 {
            return Err(Error::OutOfRange(format!(
                "bidder index {bidder} in a two-bidder normal form"
            )));
        }
        let n = self.queries();
        if k > n + 1 {
            return Err(Error::OutOfRange(format!(
                "position {k} exceeds n+1 = {}",
                n + 1
            )));
        }
        Ok((self.prefix_value(bidder, k), self.suffix_value(bidder, k)))
    }
}

/// Liquid welfare of one bidder under an allocation: the bidder's target times
/// the total value it wins. Targets here are the *true* ones — welfare is
/// always measured at truth even when the allocation arose from a misreport.
pub fn liquid_welfare(
    instance: &Instance,
    targets: &Targets,
    allocation: &Allocation,
    bidder: usize,
) -> Result<Rat> {
    if bidder >= instance.bidders() || targets.len() != instance.bidders() {
        return Err(Error::OutOfRange(format!(
            "bidder {bidder} / {} targets in an instance with {} bidders",
            targets.len(),
            instance.bidders()
        )));
    }
    if allocation.winners().len() != instance.queries() {
        return Err(Error::InvalidInput(format!(
            "allocation covers {} queries, instance has {}",
            allocation.winners().len(),
            instance.queries()
        )));
    }
    let mut won = Rat::zero();
    for j in allocation.won_by(bidder) {
        won += instance.value(bidder, j);
    }
    Ok(targets.get(bidder) * won)
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

    /// Running micro-instance: v1 = [4, 1], v2 = [1, 2], already ratio-sorted.
    fn micro() -> NormalizedInstance {
        NormalizedInstance::from_instance(&inst(&[&[4, 1], &[1, 2]])).unwrap()
    }

    #[test]
    fn sorted_instance_passes_through_with_identity_trace() {
        let raw = inst(&[&[4, 1], &[1, 2]]);
        let (norm, trace) = normalize_instance(&raw);
        assert_eq!(norm, raw);
        assert_eq!(trace, vec![vec![0], vec![1]]);
    }

    #[test]
    fn equal_ratio_queries_merge_component_wise() {
        // Ratios 2, 2, 1/2: the first two queries fuse into one.
        let raw = inst(&[&[2, 4, 1], &[1, 2, 2]]);
        let (norm, trace) = normalize_instance(&raw);
        assert_eq!(norm, inst(&[&[6, 1], &[3, 2]]));
        assert_eq!(trace, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn unsorted_queries_are_reordered_by_ratio() {
        let raw = inst(&[&[1, 4], &[2, 1]]); // ratios 1/2, 4
        let (norm, trace) = normalize_instance(&raw);
        assert_eq!(norm, inst(&[&[4, 1], &[1, 2]]));
        assert_eq!(trace, vec![vec![1], vec![0]]);
    }

    #[test]
    fn three_bidder_instances_are_left_alone() {
        let raw = inst(&[&[1, 4], &[2, 1], &[3, 3]]);
        let (norm, trace) = normalize_instance(&raw);
        assert_eq!(norm, raw);
        assert_eq!(trace, vec![vec![0], vec![1]]);
    }

    #[test]
    fn rejects_non_positive_values_and_bad_shapes() {
        assert!(Instance::new(vec![vec![rat_int(1)], vec![rat_int(0)]]).is_err());
        assert!(Instance::new(vec![vec![rat_int(1)], vec![rat_int(-2)]]).is_err());
        assert!(Instance::new(vec![vec![rat_int(1)]]).is_err()); // one bidder
        assert!(Instance::new(vec![vec![], vec![]]).is_err()); // zero queries
        assert!(Instance::new(vec![vec![rat_int(1)], vec![rat_int(1), rat_int(2)]]).is_err());
    }

    #[test]
    fn prefix_and_suffix_sums_match_hand_computation() {
        let norm = micro();
        // Bidder 1: prefixes 0,4,5; suffixes over {1..2}: 5, then {2}: 1, empty: 0.
        assert_eq!(norm.prefix_suffix_sums(0, 0).unwrap(), (rat_int(0), rat_int(5)));
        assert_eq!(norm.prefix_suffix_sums(0, 1).unwrap(), (rat_int(4), rat_int(5)));
        assert_eq!(norm.prefix_suffix_sums(0, 2).unwrap(), (rat_int(5), rat_int(1)));
        assert_eq!(norm.prefix_suffix_sums(0, 3).unwrap(), (rat_int(5), rat_int(0)));
        // Bidder 2: prefixes 0,1,3.
        assert_eq!(norm.prefix_suffix_sums(1, 2).unwrap(), (rat_int(3), rat_int(2)));
        assert!(norm.prefix_suffix_sums(0, 4).is_err());
        assert!(norm.prefix_suffix_sums(2, 0).is_err());
    }

    #[test]
    fn ratio_chain_includes_virtual_sentinels() {
        let norm = micro();
        assert_eq!(norm.ratio(0), ExtRat::Infinite);
        assert_eq!(norm.ratio(1), ExtRat::Finite(rat_int(4)));
        assert_eq!(norm.ratio(2), ExtRat::Finite(rat(1, 2)));
        assert_eq!(norm.ratio(3), ExtRat::zero());
    }

    #[test]
    fn liquid_welfare_scales_won_value_by_the_true_target() {
        let raw = inst(&[&[4, 1], &[1, 2]]);
        let targets = Targets::pair(rat_int(1), rat_int(1)).unwrap();
        let alloc = Allocation::from_prefix(1, 2);
        assert_eq!(liquid_welfare(&raw, &targets, &alloc, 0).unwrap(), rat_int(4));
        assert_eq!(liquid_welfare(&raw, &targets, &alloc, 1).unwrap(), rat_int(2));

        let halved = Targets::pair(rat(1, 2), rat_int(1)).unwrap();
        assert_eq!(liquid_welfare(&raw, &halved, &alloc, 0).unwrap(), rat_int(2));
    }

    #[test]
    fn prefix_allocation_splits_queries_at_k() {
        let alloc = Allocation::from_prefix(2, 4);
        assert_eq!(alloc.winners(), &[0, 0, 1, 1]);
        assert_eq!(alloc.won_by(0), vec![0, 1]);
        assert_eq!(alloc.won_by(1), vec![2, 3]);
        let all_second = Allocation::from_prefix(0, 2);
        assert_eq!(all_second.winners(), &[1, 1]);
    }
}
