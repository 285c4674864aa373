//! Level, keel and parametric-degree bounds of rational surfaces, computed
//! exactly.
//!
//! Two backends compute the same invariants:
//!
//! * [`polygon`]: toric surfaces given by a convex lattice polygon;
//! * [`picard`] + [`adjoint`]: blowup models given by a Picard lattice and a
//!   nef, big divisor class, processed by the adjoint chain.
//!
//! [`oracle`] holds brute-force validators (offset enumeration, fat-point
//! interpolation ranks) that are independent of both backends.
//!
//! All algorithms are generic over an integer [`Scalar`]; the aliases below
//! fix the machine-integer instantiation used by the command line tool.

pub mod adjoint;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod picard;
pub mod polygon;
pub mod scalar;
pub mod selfcheck;

pub use scalar::{fraction_string, Scalar};

/// Exact rational over `i64`.
pub type Rational = num_rational::Ratio<i64>;
pub type LatticePolygon = polygon::LatticePolygon<i64>;
pub type RationalPolygon = polygon::RationalPolygon<i64>;
pub type PolygonInvariants = polygon::PolygonInvariants<i64>;
pub type PolygonChain = polygon::PolygonChain<i64>;
pub type SurfaceModel = picard::SurfaceModel<i64>;
pub type DivisorClass = picard::DivisorClass<i64>;
pub type AdjointChainResult = adjoint::AdjointChainResult<i64>;
pub type PdegBounds = adjoint::PdegBounds<i64>;
