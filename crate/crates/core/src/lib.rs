//! Exact-arithmetic toolkit for tCPA auto-bidder equilibria in single-slot
//! second-price auctions.
//!
//! Two bidders with target-CPA constraints and uniform bid multipliers admit a
//! clean equilibrium structure: every equilibrium allocates a prefix of the
//! queries (ordered by value ratio) to bidder 1 and the complementary suffix to
//! bidder 2. This crate enumerates those prefix equilibria in exact rational
//! arithmetic, synthesizes witness multipliers, re-verifies everything against
//! brute-force oracles, and audits reporting incentives (how the liquid-welfare
//! range moves as bidder 1 under- or over-reports its target).
//!
//! ```
//! use autobid_eq_core::{
//!     model::{Instance, NormalizedInstance, Targets, TieBreak},
//!     nonuniform::{verify_equilibrium, BidProfile},
//!     rational::rat_int,
//!     uniform::{enumerate_equilibria, witness_multipliers},
//! };
//!
//! # fn main() -> autobid_eq_core::Result<()> {
//! let raw = Instance::new(vec![
//!     vec![rat_int(4), rat_int(1)],
//!     vec![rat_int(1), rat_int(2)],
//! ])?;
//! let norm = NormalizedInstance::from_instance(&raw)?;
//! let targets = Targets::pair(rat_int(1), rat_int(1))?;
//!
//! for k in enumerate_equilibria(&norm, &targets) {
//!     let w = witness_multipliers(&norm, &targets, k, TieBreak::Bidder1Wins)?;
//!     let bids = BidProfile::from_uniform(&norm, &targets, &w);
//!     // Uniform witnesses resist multiplier deviations by construction;
//!     // verify separately if arbitrary-deviation stability is needed:
//!     let verdict = verify_equilibrium(norm.instance(), &targets, &bids,
//!                                      TieBreak::Bidder1Wins, 12)?;
//!     println!("k={k}: μ=({}, {}), subset-stable={}",
//!              w.mu1(), w.mu2(), verdict.is_equilibrium);
//! }
//! # Ok(())
//! # }
//! ```

pub mod audit;
pub mod error;
pub mod feasibility;
pub mod gen;
pub mod io;
pub mod model;
pub mod nonuniform;
pub mod oracle;
pub mod rational;
pub mod uniform;

pub use error::{Error, Result};
pub use feasibility::FeasibilityInterval;
pub use model::{
    liquid_welfare, normalize_instance, Allocation, Instance, NormalizedInstance, Targets,
    TieBreak,
};
pub use rational::{ExtRat, Rat};
pub use uniform::{ConditionLedger, ExistenceCertificate, UniformProfile};
