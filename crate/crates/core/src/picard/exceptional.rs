use super::model::{DivisorClass, ModelKind, Surface};
use super::PicardError;
use crate::scalar::Scalar;

/// Depth-first search for `(d; m)` with `Σm² = target2`, `Σm = target1`
/// over the remaining `slots`, pruned by Cauchy–Schwarz, `|Σm| ≤ Σm²` and
/// parity (`m ≡ m² mod 2`).
fn fill(slots: usize, target1: i64, target2: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if target2 < 0 || target1.abs() > target2 || (target1 - target2) % 2 != 0 {
        return;
    }
    if target1 * target1 > slots as i64 * target2 {
        return;
    }
    if slots == 0 {
        if target1 == 0 && target2 == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let bound = (target2 as f64).sqrt() as i64 + 1;
    for m in -bound..=bound {
        if m * m > target2 {
            continue;
        }
        prefix.push(m);
        fill(slots - 1, target1 - m, target2 - m * m, prefix, out);
        prefix.pop();
    }
}

/// All `(d; m₁..m_r)` with `d² − Σmᵢ² = −1`, `−3d + Σmᵢ = −1` and
/// `d ≤ max_degree`, sorted lexicographically.
fn degree_multiplicity_solutions(r: usize, max_degree: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut d = 0;
    // (3d − 1)² ≤ r(d² + 1) by Cauchy–Schwarz
    while d <= max_degree && ((3 * d - 1) * (3 * d - 1) <= r as i64 * (d * d + 1) || d == 0) {
        let mut prefix = vec![d];
        fill(r, 3 * d - 1, d * d + 1, &mut prefix, &mut out);
        d += 1;
    }
    out.sort();
    out
}

/// Basis coordinates `(d, −m₁, …, −m_r)` of every (−1)-class of `P²`
/// blown up in `r ≤ 8` points.
pub(crate) fn neg_one_vectors<T: Scalar>(r: usize) -> Vec<Vec<T>> {
    degree_multiplicity_solutions(r, i64::MAX)
        .into_iter()
        .map(|v| v.iter().enumerate().map(|(i, &x)| T::of(if i == 0 { x } else { -x })).collect())
        .collect()
}

fn plane_rank<T: Scalar>(model: &Surface<T>) -> Result<usize, PicardError> {
    match model.kind() {
        ModelKind::PlaneBlowup { r } if *r <= 8 => Ok(*r),
        ModelKind::PlaneBlowup { r } => Err(PicardError::UnsupportedRank(*r)),
        other => Err(PicardError::InvalidModel(format!("(−1)-class search needs a plane blowup, not {other}"))),
    }
}

/// Every class with `C² = C·K = −1` on a plane blowup, in lexicographic
/// `(d; m)` order.
pub fn neg_one_classes<T: Scalar>(model: &Surface<T>) -> Result<Vec<DivisorClass<T>>, PicardError> {
    plane_rank(model)?;
    Ok(model.contractibles().iter().map(|v| DivisorClass::unchecked(model, v.clone())).collect())
}

/// The (−1)-classes of degree at most `max_degree`, found by a fresh search.
pub fn neg_one_classes_bounded<T: Scalar>(
    model: &Surface<T>,
    max_degree: i64,
) -> Result<Vec<DivisorClass<T>>, PicardError> {
    let r = plane_rank(model)?;
    Ok(degree_multiplicity_solutions(r, max_degree)
        .into_iter()
        .map(|v| {
            let coeffs = v.iter().enumerate().map(|(i, &x)| T::of(if i == 0 { x } else { -x })).collect();
            DivisorClass::unchecked(model, coeffs)
        })
        .collect())
}

/// Basis vector of `L − Eᵢ − Eⱼ − E_k` (indices 1-based, as in the basis).
fn cremona_root<T: Scalar>(rank: usize, triple: [usize; 3]) -> Vec<T> {
    let mut alpha = vec![T::zero(); rank];
    alpha[0] = T::one();
    for i in triple {
        alpha[i] = -T::one();
    }
    alpha
}

/// `v ↦ v + (v·α)α` for `α = L − Eᵢ − Eⱼ − E_k` on the diagonal plane form.
pub(crate) fn reflect<T: Scalar>(v: &[T], triple: [usize; 3]) -> Vec<T> {
    let alpha = cremona_root::<T>(v.len(), triple);
    let pairing = v[0].clone() + triple.iter().fold(T::zero(), |acc, &i| acc + v[i].clone());
    v.iter().zip(&alpha).map(|(x, a)| x.clone() + pairing.clone() * a.clone()).collect()
}

/// Quadratic Cremona reflection centred at the points `i, j, k` (1-based).
/// An isometry fixing `K`.
pub fn cremona_reflect<T: Scalar>(class: &DivisorClass<T>, triple: [usize; 3]) -> Result<DivisorClass<T>, PicardError> {
    let r = plane_rank(class.model())?;
    let distinct = triple[0] != triple[1] && triple[1] != triple[2] && triple[0] != triple[2];
    if !distinct || triple.iter().any(|&i| i == 0 || i > r) {
        return Err(PicardError::InvalidModel(format!("Cremona centres {triple:?} are not three distinct points of {r}")));
    }
    Ok(DivisorClass::unchecked(class.model(), reflect(class.coeffs(), triple)))
}

/// Reflections taking a (−1)-class to some `E_j`: returns the triples used
/// (in order) and `j`. Each step lowers the degree, by Noether's inequality
/// `d < m₁ + m₂ + m₃` for the three largest multiplicities.
pub(crate) fn reduce_to_standard<T: Scalar>(class: &[T]) -> Option<(Vec<[usize; 3]>, usize)> {
    let r = class.len() - 1;
    let mut v = class.to_vec();
    let mut steps = Vec::new();
    while !v[0].is_zero() {
        if r < 3 || steps.len() > 64 {
            return None;
        }
        // largest multiplicity = most negative coefficient
        let mut order: Vec<usize> = (1..=r).collect();
        order.sort_by(|&a, &b| v[a].cmp(&v[b]).then(a.cmp(&b)));
        let triple = [order[0], order[1], order[2]];
        let next = reflect(&v, triple);
        if next[0] >= v[0] {
            return None;
        }
        v = next;
        steps.push(triple);
    }
    let j = (1..=r).find(|&i| v[i].is_one())?;
    let standard = (1..=r).all(|i| if i == j { v[i].is_one() } else { v[i].is_zero() });
    standard.then_some((steps, j))
}
