use serde::Serialize;

use super::AdjointError;
use crate::picard::{is_nef, DivisorClass, Surface};
use crate::scalar::Scalar;

/// Minimal surfaces the chain can end on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "surface")]
pub enum EndpointSurface<T> {
    /// `K² = 9`, `K = −3L`.
    ProjectivePlane,
    /// `K² = 8`, `K = −2Q` for the conic sections `Q`.
    Quadric,
    /// Rank one, `K² = 5`, hyperplane class `−K`.
    DelPezzo5,
    /// Rank one, `K² = 6`, hyperplane class `−K`.
    DelPezzo6,
    /// Conic fibration on `F_n`: `K = −(n+2)P − 2C`.
    RuledSurface { n: T },
    /// Conic fibration with `K² = 6`: `K = −2P − E`, `P·E = 2`.
    QuadricPointDeg2,
    /// Conic fibration with `K² = 5`: `P = 2L − E`, `K = −3L + E`.
    PlanePointDeg4,
}

impl<T> EndpointSurface<T> {
    pub fn tag(&self) -> &'static str {
        match self {
            EndpointSurface::ProjectivePlane => "projective_plane",
            EndpointSurface::Quadric => "quadric",
            EndpointSurface::DelPezzo5 => "del_pezzo_5",
            EndpointSurface::DelPezzo6 => "del_pezzo_6",
            EndpointSurface::RuledSurface { .. } => "ruled_surface",
            EndpointSurface::QuadricPointDeg2 => "quadric_point_deg2",
            EndpointSurface::PlanePointDeg4 => "plane_point_deg4",
        }
    }
}

/// Classified endpoint with its parametrizing class `Q`.
#[derive(Debug, Clone)]
pub struct Endpoint<T: Scalar> {
    pub surface: EndpointSurface<T>,
    pub parametrizing: DivisorClass<T>,
}

fn unknown<T: Scalar>(model: &Surface<T>, why: &str) -> AdjointError {
    AdjointError::UnknownEndpoint(format!("{} of rank {} with K² = {}: {why}", model.kind(), model.rank(), model.degree()))
}

/// Classes to search for sections and exceptional curves.
fn candidates<T: Scalar>(model: &Surface<T>) -> impl Iterator<Item = DivisorClass<T>> + '_ {
    model
        .effective_generators()
        .iter()
        .chain(model.contractibles())
        .map(move |v| DivisorClass::new(model, v.clone()).expect("model vectors have model rank"))
}

/// Identifies the terminal surface of a chain, given the fiber class when
/// the terminal class is a multiple of one.
pub fn classify_endpoint<T: Scalar>(
    model: &Surface<T>,
    fiber: Option<&DivisorClass<T>>,
) -> Result<Endpoint<T>, AdjointError> {
    let k = DivisorClass::canonical(model);
    let minus_k = k.scaled(&-T::one());
    let degree = model.degree();
    let endpoint = |surface, parametrizing| Ok(Endpoint { surface, parametrizing });
    let Some(p) = fiber else {
        return match degree.to_i64() {
            Some(9) => match minus_k.divided(&T::of(3)) {
                Some(line) => endpoint(EndpointSurface::ProjectivePlane, line),
                None => Err(unknown(model, "K is not divisible by 3")),
            },
            Some(8) if model.contractibles().is_empty() => match minus_k.divided(&T::of(2)) {
                Some(conic) => endpoint(EndpointSurface::Quadric, conic),
                None => Err(unknown(model, "K is not divisible by 2")),
            },
            Some(5) if model.rank() == 1 => endpoint(EndpointSurface::DelPezzo5, minus_k),
            Some(6) if model.rank() == 1 => endpoint(EndpointSurface::DelPezzo6, minus_k),
            _ => Err(unknown(model, "not a minimal surface with nef anticanonical class")),
        };
    };
    match degree.to_i64() {
        Some(8) => {
            let section = candidates(model)
                .filter(|c| c.intersect(p).ok() == Some(T::one()))
                .min_by(|a, b| a.square().cmp(&b.square()))
                .ok_or_else(|| unknown(model, "no section meets the fiber once"))?;
            let n = -section.square();
            // K = −(n+2)P − 2C
            let expected = p.scaled(&-(n.clone() + T::of(2))).combine(&T::one(), &section, &T::of(-2))?;
            if expected != k {
                return Err(unknown(model, "section and fiber do not give the canonical class"));
            }
            let q = if n.is_zero() { T::one() } else { n.clone() };
            let parametrizing = section.combine(&T::one(), p, &q)?;
            endpoint(EndpointSurface::RuledSurface { n }, parametrizing)
        }
        Some(6) => {
            let e = candidates(model)
                .find(|c| c.square() == T::of(-2) && c.intersect(p).ok() == Some(T::of(2)))
                .ok_or_else(|| unknown(model, "no class E with E² = −2 and P·E = 2"))?;
            if p.scaled(&T::of(-2)).sub(&e)? != k {
                return Err(unknown(model, "K ≠ −2P − E"));
            }
            endpoint(EndpointSurface::QuadricPointDeg2, p.add(&e)?)
        }
        Some(5) => {
            let (e, line) = candidates(model)
                .filter(|c| c.square() == T::of(-4))
                .find_map(|e| p.add(&e).ok()?.divided(&T::of(2)).map(|line| (e, line)))
                .ok_or_else(|| unknown(model, "no class E with E² = −4 and (P + E)/2 integral"))?;
            if line.scaled(&T::of(-3)).add(&e)? != k {
                return Err(unknown(model, "K ≠ −3L + E"));
            }
            endpoint(EndpointSurface::PlanePointDeg4, line)
        }
        _ => Err(unknown(model, "no conic fibration case has this degree")),
    }
}

/// Invariants every constructed parametrizing class satisfies: nef, with
/// `Q·K ≤ −3`.
pub(crate) fn parametrizing_is_sound<T: Scalar>(q: &DivisorClass<T>) -> bool {
    is_nef(q) && q.dot_canonical() <= T::of(-3)
}
