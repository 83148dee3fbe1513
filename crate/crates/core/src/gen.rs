//! Deterministic random generation of instances and targets.
//!
//! Everything here is seeded ChaCha, so a seed pins the generated data
//! byte-for-byte — corpora in tests, benches, and CLI runs are reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::model::Instance;
use crate::rational::{rat, Rat};

/// The crate's reproducible RNG.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An `m × n` instance with integer values drawn uniformly from `[1, max_value]`.
pub fn random_instance(
    rng: &mut impl Rng,
    bidders: usize,
    queries: usize,
    max_value: u64,
) -> Result<Instance> {
    let values = (0..bidders)
        .map(|_| {
            (0..queries)
                .map(|_| Rat::from_integer(rng.gen_range(1..=max_value.max(1)).into()))
                .collect()
        })
        .collect();
    Instance::new(values)
}

/// A query count uniform in `[1, max]`.
pub fn random_query_count(rng: &mut impl Rng, max: usize) -> usize {
    rng.gen_range(1..=max.max(1))
}

/// A target `p/q` with `p, q` uniform in `[1, 20]`, resampled until it lands
/// in `[1/4, 4]` — a band wide enough to exercise every equilibrium regime.
pub fn random_target(rng: &mut impl Rng) -> Rat {
    loop {
        let t = rat(rng.gen_range(1..=20), rng.gen_range(1..=20));
        if t >= rat(1, 4) && t <= rat(4, 1) {
            return t;
        }
    }
}
