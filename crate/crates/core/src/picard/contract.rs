use num_rational::Ratio;

use super::exceptional::{reduce_to_standard, reflect};
use super::model::{DivisorClass, ModelKind, Surface, SurfaceModel};
use super::PicardError;
use crate::linalg::{bilinear, mat_vec, solve, unimodular_completion, IntMatrix};
use crate::scalar::{lift, Scalar};

/// Blow-down `φ: S → S'` of one exceptional class, as lattice maps.
///
/// `φ*` embeds `Pic(S')` as `E^⊥`; `φ_*` is the orthogonal projection
/// `D ↦ D − (D·E / E²)·E` read in the pulled-back basis.
#[derive(Debug, Clone)]
pub struct Contraction<T: Scalar> {
    pub source: Surface<T>,
    pub target: Surface<T>,
    exceptional: Vec<T>,
    /// Source coordinates of `φ*` of each target basis vector.
    pulled_basis: Vec<Vec<T>>,
}

impl<T: Scalar> Contraction<T> {
    pub fn exceptional(&self) -> DivisorClass<T> {
        DivisorClass::unchecked(&self.source, self.exceptional.clone())
    }

    /// `φ*`: target class to source class.
    pub fn pullback(&self, divisor: &DivisorClass<T>) -> Result<DivisorClass<T>, PicardError> {
        if divisor.model() != &self.target && **divisor.model() != *self.target {
            return Err(PicardError::ModelMismatch);
        }
        let mut out = vec![T::zero(); self.source.rank()];
        for (c, b) in divisor.coeffs().iter().zip(&self.pulled_basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
        Ok(DivisorClass::unchecked(&self.source, out))
    }

    /// `φ_*`: source class to target class.
    pub fn pushforward(&self, divisor: &DivisorClass<T>) -> Result<DivisorClass<T>, PicardError> {
        if divisor.model() != &self.source && **divisor.model() != *self.source {
            return Err(PicardError::ModelMismatch);
        }
        let coeffs = push_coordinates(&self.pulled_basis, &self.exceptional, divisor.coeffs())
            .ok_or_else(|| PicardError::NotIntegral(divisor.to_string()))?;
        Ok(DivisorClass::unchecked(&self.target, coeffs))
    }
}

/// Solves `v = Σ xᵢ·bᵢ + c·E` and returns the integral `x`, if any.
fn push_coordinates<T: Scalar>(basis: &[Vec<T>], exceptional: &[T], v: &[T]) -> Option<Vec<T>> {
    let n = v.len();
    let mut columns: Vec<&[T]> = basis.iter().map(Vec::as_slice).collect();
    columns.push(exceptional);
    let a: Vec<Vec<Ratio<T>>> = (0..n).map(|i| columns.iter().map(|c| lift(c[i].clone())).collect()).collect();
    let b: Vec<Ratio<T>> = v.iter().cloned().map(lift).collect();
    let x = solve(&a, &b)?;
    x[..n - 1].iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

fn unit<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()
}

fn is_standard_exceptional<T: Scalar>(v: &[T]) -> Option<usize> {
    let j = (1..v.len()).find(|&i| !v[i].is_zero())?;
    (v[0].is_zero() && v[j].is_one() && (1..v.len()).all(|i| i == j || v[i].is_zero())).then_some(j)
}

/// The blow-down of `exceptional`, which must be one of the model's
/// contractible classes.
pub fn contraction<T: Scalar>(
    model: &Surface<T>,
    exceptional: &DivisorClass<T>,
) -> Result<Contraction<T>, PicardError> {
    let e = exceptional.coeffs().to_vec();
    if exceptional.model() != model && **exceptional.model() != **model {
        return Err(PicardError::ModelMismatch);
    }
    if !model.contractibles().contains(&e) {
        return Err(PicardError::NotContractible(exceptional.to_string()));
    }
    let n = model.rank();
    let built = |target: Surface<T>, pulled_basis: Vec<Vec<T>>| Contraction {
        source: model.clone(),
        target,
        exceptional: e.clone(),
        pulled_basis,
    };
    match model.kind() {
        ModelKind::PlaneBlowup { r } => {
            if let Some(j) = is_standard_exceptional(&e) {
                let basis = (0..n).filter(|&i| i != j).map(|i| unit(n, i)).collect();
                return Ok(built(SurfaceModel::plane_blowup(r - 1)?, basis));
            }
            if let Some((steps, j)) = reduce_to_standard(&e) {
                // basis of the reflected model, carried back by the inverse isometry
                let basis = (0..n)
                    .filter(|&i| i != j)
                    .map(|i| steps.iter().rev().fold(unit(n, i), |v, t| reflect(&v, *t)))
                    .collect();
                return Ok(built(SurfaceModel::plane_blowup(r - 1)?, basis));
            }
            if *r == 2 {
                // L − E₁ − E₂ down to P¹ × P¹ with F₁ = L − E₁, F₂ = L − E₂
                let basis = vec![vec![T::one(), -T::one(), T::zero()], vec![T::one(), T::zero(), -T::one()]];
                return Ok(built(SurfaceModel::quadric(), basis));
            }
            generic(model, &e).map(|(target, basis)| built(target, basis))
        }
        ModelKind::Hirzebruch { n: 1 } => {
            Ok(built(SurfaceModel::plane_blowup(0)?, vec![vec![T::one(), T::one()]]))
        }
        _ => generic(model, &e).map(|(target, basis)| built(target, basis)),
    }
}

/// Blow-down through an integral basis of `E^⊥` from a unimodular
/// completion of the functional `x ↦ E·x`.
fn generic<T: Scalar>(model: &Surface<T>, e: &[T]) -> Result<(Surface<T>, Vec<Vec<T>>), PicardError> {
    let n = model.rank();
    let functional = mat_vec(model.gram(), e);
    let (u, _) = unimodular_completion(&functional);
    let mut basis: Vec<Vec<T>> = (1..n).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect();
    let push = |v: &[T]| push_coordinates(&basis, e, v).ok_or_else(|| PicardError::NotIntegral(format!("{v:?}")));
    let mut canonical = push(model.canonical())?;
    if n == 2 && canonical[0].is_positive() {
        basis[0] = basis[0].iter().map(|x| -x.clone()).collect();
        canonical[0] = -canonical[0].clone();
    }
    let push = |v: &[T]| push_coordinates(&basis, e, v).ok_or_else(|| PicardError::NotIntegral(format!("{v:?}")));
    let gram: IntMatrix<T> =
        basis.iter().map(|a| basis.iter().map(|b| bilinear(model.gram(), a, b)).collect()).collect();
    if gram == vec![vec![T::one()]] && canonical == vec![T::of(-3)] {
        return Ok((SurfaceModel::plane_blowup(0)?, basis));
    }
    let mut generators = Vec::new();
    for g in model.effective_generators() {
        let image = push(g)?;
        if g.as_slice() != e && image.iter().any(|x| !x.is_zero()) && !generators.contains(&image) {
            generators.push(image);
        }
    }
    let mut contractibles = Vec::new();
    for c in model.contractibles() {
        if c.as_slice() != e && model.pair(c, e).is_zero() {
            contractibles.push(push(c)?);
        }
    }
    let target = SurfaceModel::custom(gram, canonical, generators, contractibles)?;
    Ok((target, basis))
}

/// Blows down `exceptional` and pushes `divisor` forward.
pub fn contract<T: Scalar>(
    model: &Surface<T>,
    exceptional: &DivisorClass<T>,
    divisor: &DivisorClass<T>,
) -> Result<(Surface<T>, DivisorClass<T>), PicardError> {
    let c = contraction(model, exceptional)?;
    let pushed = c.pushforward(divisor)?;
    Ok((c.target.clone(), pushed))
}

/// Which eligible exceptional class is blown down first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Lexicographically smallest basis coordinates.
    #[default]
    Smallest,
    /// Lexicographically largest, for order-independence checks.
    Largest,
}

/// Result of blowing down every exceptional class orthogonal to `D`.
#[derive(Debug, Clone)]
pub struct Minimalization<T: Scalar> {
    pub model: Surface<T>,
    pub divisor: DivisorClass<T>,
    pub contractions: Vec<Contraction<T>>,
}

impl<T: Scalar> Minimalization<T> {
    /// `μ*` of a class on the minimal model.
    pub fn pullback(&self, divisor: &DivisorClass<T>) -> Result<DivisorClass<T>, PicardError> {
        self.contractions.iter().rev().try_fold(divisor.clone(), |d, c| c.pullback(&d))
    }
}

pub fn minimalize<T: Scalar>(divisor: &DivisorClass<T>) -> Result<Minimalization<T>, PicardError> {
    minimalize_with(divisor, TieBreak::Smallest)
}

/// Repeatedly blows down a contractible `E` with `D·E = 0` until none is
/// left.
pub fn minimalize_with<T: Scalar>(
    divisor: &DivisorClass<T>,
    tie_break: TieBreak,
) -> Result<Minimalization<T>, PicardError> {
    let mut current = divisor.clone();
    let mut contractions = Vec::new();
    loop {
        let model = current.model().clone();
        let eligible = model.contractibles().iter().filter(|e| model.pair(current.coeffs(), e).is_zero());
        let pick = match tie_break {
            TieBreak::Smallest => eligible.min(),
            TieBreak::Largest => eligible.max(),
        };
        let Some(e) = pick else { break };
        let c = contraction(&model, &DivisorClass::unchecked(&model, e.clone()))?;
        current = c.pushforward(&current)?;
        contractions.push(c);
    }
    Ok(Minimalization { model: current.model().clone(), divisor: current, contractions })
}
