//! Shared fixtures for the criterion benchmarks: deterministic instances at
//! the sizes the benches exercise.

use autobid_eq_core::gen;
use autobid_eq_core::model::{NormalizedInstance, Targets};

/// A seeded two-bidder instance in normal form with its targets.
pub fn fixture(seed: u64, queries: usize) -> (NormalizedInstance, Targets) {
    let mut rng = gen::seeded_rng(seed);
    let raw = gen::random_instance(&mut rng, 2, queries, 100).unwrap();
    let targets =
        Targets::pair(gen::random_target(&mut rng), gen::random_target(&mut rng)).unwrap();
    (
        NormalizedInstance::from_instance(&raw).unwrap(),
        targets,
    )
}
