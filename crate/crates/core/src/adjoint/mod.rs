//! The adjoint chain on Picard lattices and the bounds read off its end.
//!
//! Starting from a nef and big class `D`, the chain blows down exceptional
//! classes orthogonal to `D`, then alternates `Dᵢ ↦ Dᵢ + Kᵢ` with
//! minimalization until the adjoint class stops being effective. The
//! terminal pair `(S_a, D_a)` determines level and keel exactly and, via
//! the classification of the endpoint surface, a parametrizing class.

mod bounds;
mod chain;
mod checks;
mod endpoint;
mod high;

pub use bounds::{bounds_from_chain, case_formula, pdeg_bounds, PdegBounds};
pub use chain::{adjoint_chain, adjoint_chain_with, level_keel_divisor, AdjointChainResult, ChainStep, EndpointCase};
pub use checks::{check_chain, InvariantCheck};
pub use endpoint::{classify_endpoint, Endpoint, EndpointSurface};
pub use high::{example_high_report, BasePointGroup, HighExampleReport};

use thiserror::Error;

use crate::picard::PicardError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjointError {
    #[error("class {0} is not nef")]
    NotNef(String),
    #[error("class {0} has nonpositive self-intersection")]
    NotBig(String),
    #[error("class {0} is not effective")]
    NotEffective(String),
    #[error("adjoint chain exceeded {cap} steps, above the level bound")]
    NonTerminating { cap: usize },
    #[error("endpoint matches no known case: {0}")]
    UnknownEndpoint(String),
    #[error("n must be an odd integer at least 5, got {0}")]
    BadN(i64),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Picard(#[from] PicardError),
}
