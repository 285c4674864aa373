use num_rational::Ratio;

use super::chain::{adjoint_chain, AdjointChainResult, EndpointCase};
use super::endpoint::{classify_endpoint, EndpointSurface};
use super::AdjointError;
use crate::picard::DivisorClass;
use crate::scalar::{lift, Scalar};

/// Lower and upper bounds on the parametric degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdegBounds<T: Scalar> {
    pub level: Ratio<T>,
    pub keel: Ratio<T>,
    /// `3·level + keel`.
    pub lower: Ratio<T>,
    /// `⌈lower⌉`: the parametric degree is an integer.
    pub lower_int: T,
    /// `6·level + 2·keel`.
    pub upper: Ratio<T>,
    /// `φ_a*(Q)·D` for the constructed parametrizing class; absent for
    /// fractional levels.
    pub constructive_upper: Option<T>,
    pub endpoint_surface: Option<EndpointSurface<T>>,
}

/// Closed form of `Q·(D_a − a·K_a)` for each endpoint surface.
pub fn case_formula<T: Scalar>(surface: &EndpointSurface<T>, a: &T, k: &T) -> Result<T, AdjointError> {
    let (a, k) = (a.clone(), k.clone());
    Ok(match surface {
        EndpointSurface::ProjectivePlane => T::of(3) * a,
        EndpointSurface::Quadric => T::of(4) * a,
        EndpointSurface::DelPezzo5 => T::of(5) * a,
        EndpointSurface::DelPezzo6 => T::of(6) * a,
        EndpointSurface::RuledSurface { n } if n.is_zero() => T::of(4) * a + k,
        EndpointSurface::RuledSurface { n } => {
            // the input is nef on the negative section: 2a + k − an ≥ 0
            let guard = T::of(2) * a.clone() + k.clone() - a.clone() * n.clone();
            if guard < T::zero() {
                return Err(AdjointError::InvariantViolation(format!(
                    "pulled-back class meets the negative section of F_{n} in {guard}"
                )));
            }
            a.clone() * n.clone() + T::of(2) * a + k
        }
        EndpointSurface::QuadricPointDeg2 => T::of(4) * a + T::of(2) * k,
        EndpointSurface::PlanePointDeg4 => T::of(3) * a + T::of(2) * k,
    })
}

/// Bounds from a finished chain; the constructive bound is evaluated
/// directly and checked against [`case_formula`].
pub fn bounds_from_chain<T: Scalar>(chain: &AdjointChainResult<T>) -> Result<PdegBounds<T>, AdjointError> {
    let level = chain.level.clone();
    let keel = chain.keel.clone();
    let lower = lift(T::of(3)) * level.clone() + keel.clone();
    let upper = lift(T::of(6)) * level.clone() + lift(T::of(2)) * keel.clone();
    let terminal = chain.terminal();
    let model = terminal.model();
    let classified = classify_endpoint(model, chain.endpoint.fiber());
    let (constructive_upper, endpoint_surface) = if chain.endpoint.is_integral() {
        let endpoint = classified?;
        let a = T::of(chain.a as i64);
        // φ_a*(D) = D_a − a·K_a
        let image = terminal.plus_canonical(&T::one(), &-a.clone());
        let value = endpoint.parametrizing.intersect(&image)?;
        let k = match &chain.endpoint {
            EndpointCase::FiberMultiple { k, .. } => k.clone(),
            _ => T::zero(),
        };
        let formula = case_formula(&endpoint.surface, &a, &k)?;
        if formula != value {
            return Err(AdjointError::InvariantViolation(format!(
                "Q·(D_a − aK_a) = {value} but the case formula gives {formula}"
            )));
        }
        (Some(value), Some(endpoint.surface))
    } else {
        (None, classified.ok().map(|e| e.surface))
    };
    Ok(PdegBounds { lower_int: lower.ceil().to_integer(), level, keel, lower, upper, constructive_upper, endpoint_surface })
}

pub fn pdeg_bounds<T: Scalar>(divisor: &DivisorClass<T>) -> Result<PdegBounds<T>, AdjointError> {
    bounds_from_chain(&adjoint_chain(divisor)?)
}
