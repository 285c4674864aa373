//! Lattice-polygon calculus for toric surfaces.
//!
//! A convex lattice polygon `Γ = {x : ⟨nₑ, x⟩ ≥ aₑ}` (primitive inner
//! normals `nₑ`) stands for a divisor `D` on a toric surface; the class
//! `qD + pK` corresponds to `{x : ⟨nₑ, x⟩ ≥ q·aₑ + p}`. Level and keel are
//! read off the last nonempty member of that family, and the adjoint chain
//! is the iterated convex hull of interior lattice points.

mod chain;
mod hull;
mod invariants;
mod rational;
pub mod svg;

pub use chain::{polygon_adjoint_chain, PolygonChain, PolygonEndpoint};
pub use hull::{convex_hull, LatticePolygon, PolygonEdge};
pub use invariants::{interior_hull, keel_by_count, level_keel, nmc_polygon, offset_scale, PolygonInvariants};
pub use rational::{lattice_points, HalfPlane, RationalPolygon, Shape};

use num_rational::Ratio;
use thiserror::Error;

/// Integer point `[x, y]`.
pub type LatticePoint<T> = [T; 2];
/// Rational point `[x, y]`.
pub type RationalPoint<T> = [Ratio<T>; 2];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("input is degenerate: the convex hull is {0}, not a 2-dimensional polygon")]
    DegenerateInput(&'static str),
    #[error("polygon input has no points")]
    EmptyInput,
    #[error("half-plane system does not bound a region")]
    Unbounded,
    #[error("vertex ({0}) is not a lattice point")]
    NonLatticeVertices(String),
}
