//! Integer intersection theory on Picard lattices of rational surfaces.
//!
//! A [`SurfaceModel`] is a lattice with its intersection form, canonical
//! class, generators of the effective cone and the exceptional classes that
//! may be blown down. [`DivisorClass`] values carry a shared reference to
//! their model, so classes from different surfaces never mix silently.

mod cone;
mod contract;
mod exceptional;
mod model;

pub use cone::{is_effective, is_nef};
pub use contract::{contract, contraction, minimalize, minimalize_with, Contraction, Minimalization, TieBreak};
pub use exceptional::{cremona_reflect, neg_one_classes, neg_one_classes_bounded};
pub use model::{intersect, DivisorClass, ModelKind, Surface, SurfaceModel};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicardError {
    #[error("classes live on different surface models")]
    ModelMismatch,
    #[error("plane blowups are supported up to 8 points, got {0}")]
    UnsupportedRank(usize),
    #[error("expected {expected} coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("invalid surface model: {0}")]
    InvalidModel(String),
    #[error("class {0} is not a contractible exceptional class of the model")]
    NotContractible(String),
    #[error("pushforward of {0} is not integral")]
    NotIntegral(String),
    #[error("effectivity of {0} is not decided by the cone data")]
    Undecided(String),
}
