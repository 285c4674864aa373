//! Brute-force validators, independent of the polygon LP and of the
//! Picard-lattice cone tests.
//!
//! General position is modeled by pseudo-random rational points from a
//! seeded ChaCha stream, so every oracle answer is reproducible from its
//! seed.

mod fatpoint;
mod level;

pub use fatpoint::{
    class_dim, fatpoint_dim, fatpoint_dim_general, multiplicity_key, FatPointProblem, RationalPair,
};
pub use level::{divisor_level_oracle, effectivity_oracle, offset_nonempty, polygon_level_oracle};

use thiserror::Error;

/// Seed used when neither a flag nor `ADJOINT_KEEL_SEED` gives one.
pub const DEFAULT_SEED: u64 = 20_240_611;

/// Environment variable overriding [`DEFAULT_SEED`].
pub const SEED_VARIABLE: &str = "ADJOINT_KEEL_SEED";

/// `ADJOINT_KEEL_SEED` if set and numeric, else [`DEFAULT_SEED`].
pub fn default_seed() -> u64 {
    std::env::var(SEED_VARIABLE).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid fat-point problem: {0}")]
    Invalid(String),
    #[error("oracle does not cover this input: {0}")]
    Unsupported(String),
}
