use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::model::DivisorClass;
use super::PicardError;
use crate::linalg::{solve, transpose};
use crate::scalar::{lift, Scalar};

/// `D·G ≥ 0` for every effective-cone generator `G`.
pub fn is_nef<T: Scalar>(divisor: &DivisorClass<T>) -> bool {
    let model = divisor.model();
    model.effective_generators().iter().all(|g| !model.pair(divisor.coeffs(), g).is_negative())
}

/// Coordinates of `v` over the generators when they form a basis.
fn generator_coordinates<T: Scalar>(generators: &[Vec<T>], v: &[T]) -> Option<Vec<Ratio<T>>> {
    if generators.len() != v.len() {
        return None;
    }
    let columns: Vec<Vec<Ratio<T>>> =
        transpose(&generators.to_vec()).into_iter().map(|row| row.into_iter().map(lift).collect()).collect();
    solve(&columns, &v.iter().cloned().map(lift).collect::<Vec<_>>())
}

/// Effectivity by fixed-component peeling.
///
/// While some generator `G` with `G² < 0` has `R·G < 0`, `G` is a fixed
/// component of `|R|` and is subtracted (with multiplicity
/// `⌈R·G / G²⌉`). A negative pairing with a nef witness refutes; a residue
/// that is a nonnegative integer combination of independent generators, or
/// has `χ(R) = R(R−K)/2 + 1 > 0` with `(K − R)·A < 0` for a nef `A`
/// (so `h²(R) = 0`), is effective.
pub fn is_effective<T: Scalar>(divisor: &DivisorClass<T>) -> Result<bool, PicardError> {
    let model = divisor.model();
    let cap = model.rank() * 64;
    let mut residue: Vec<T> = divisor.coeffs().to_vec();
    for _ in 0..=cap {
        if model.nef_witnesses().iter().any(|a| model.pair(&residue, a).is_negative()) {
            return Ok(false);
        }
        let fixed = model.effective_generators().iter().find_map(|g| {
            let g2 = model.pair(g, g);
            let rg = model.pair(&residue, g);
            (g2.is_negative() && rg.is_negative()).then(|| (g, Ratio::new(rg, g2).ceil().to_integer()))
        });
        match fixed {
            Some((g, t)) => {
                residue = residue.iter().zip(g).map(|(x, y)| x.clone() - t.clone() * y.clone()).collect();
            }
            None => return accept_residue(divisor, &residue),
        }
    }
    Err(PicardError::Undecided(divisor.to_string()))
}

fn accept_residue<T: Scalar>(divisor: &DivisorClass<T>, residue: &[T]) -> Result<bool, PicardError> {
    let model = divisor.model();
    if residue.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    if let Some(coords) = generator_coordinates(model.effective_generators(), residue) {
        if coords.iter().all(|c| c.is_integer() && !c.is_negative()) {
            return Ok(true);
        }
    }
    let k = model.canonical();
    let chi_twice = model.pair(residue, residue) - model.pair(residue, k) + T::of(2);
    let k_minus_r: Vec<T> = k.iter().zip(residue).map(|(a, b)| a.clone() - b.clone()).collect();
    let no_h2 = model.nef_witnesses().iter().any(|a| model.pair(&k_minus_r, a).is_negative());
    if chi_twice.is_positive() && no_h2 {
        return Ok(true);
    }
    Err(PicardError::Undecided(divisor.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{Surface, SurfaceModel};

    fn dm(model: &Surface<i64>, d: i64, m: &[i64]) -> DivisorClass<i64> {
        DivisorClass::from_degree_multiplicities(model, d, m).unwrap()
    }

    #[test]
    fn nef_on_two_points() {
        let s = SurfaceModel::<i64>::plane_blowup(2).unwrap();
        assert!(is_nef(&dm(&s, 1, &[0, 0])));
        assert!(!is_nef(&dm(&s, 0, &[-1, 0])));
        assert!(is_nef(&dm(&s, 2, &[1, 1])));
        assert!(!is_nef(&dm(&s, 1, &[1, 1])));
    }

    #[test]
    fn effectivity_on_plane_blowups() {
        let s2 = SurfaceModel::<i64>::plane_blowup(2).unwrap();
        assert_eq!(is_effective(&dm(&s2, 1, &[1, 1])), Ok(true));
        let s3 = SurfaceModel::<i64>::plane_blowup(3).unwrap();
        assert_eq!(is_effective(&dm(&s3, 1, &[1, 1, 1])), Ok(false));
        assert_eq!(is_effective(&dm(&s3, 2, &[1, 1, 1])), Ok(true));
        let p2 = SurfaceModel::<i64>::plane_blowup(0).unwrap();
        assert_eq!(is_effective(&dm(&p2, -1, &[])), Ok(false));
        assert_eq!(is_effective(&dm(&p2, 0, &[])), Ok(true));
        // exceptional curves and classes with a fixed part
        let s5 = SurfaceModel::<i64>::plane_blowup(5).unwrap();
        assert_eq!(is_effective(&dm(&s5, 0, &[-1, 0, 0, 0, 0])), Ok(true));
        assert_eq!(is_effective(&dm(&s5, 2, &[1, 1, 1, 1, 1])), Ok(true));
        assert_eq!(is_effective(&dm(&s5, 2, &[2, 1, 1, 1, 0])), Ok(false));
        assert_eq!(is_effective(&dm(&s5, 3, &[2, 2, 0, 0, -3])), Ok(true));
        let s6 = SurfaceModel::<i64>::plane_blowup(6).unwrap();
        assert_eq!(is_effective(&DivisorClass::canonical(&s6)), Ok(false));
        assert_eq!(is_effective(&DivisorClass::zero(&s6)), Ok(true));
    }

    #[test]
    fn effectivity_on_rank_two_models() {
        let h = SurfaceModel::<i64>::hirzebruch(3).unwrap();
        let c = |a, b| DivisorClass::new(&h, vec![a, b]).unwrap();
        assert_eq!(is_effective(&c(1, 0)), Ok(true));
        assert_eq!(is_effective(&c(2, 1)), Ok(true));
        assert_eq!(is_effective(&c(-1, 5)), Ok(false));
        assert_eq!(is_effective(&c(1, -1)), Ok(false));
        let q4 = SurfaceModel::<i64>::plane_deg4_blowup();
        // lines are effective although L is not an integer combination of E, 2L − E
        assert_eq!(is_effective(&DivisorClass::new(&q4, vec![1, 0]).unwrap()), Ok(true));
        assert_eq!(is_effective(&DivisorClass::new(&q4, vec![1, 1]).unwrap()), Ok(true));
        assert_eq!(is_effective(&DivisorClass::new(&q4, vec![-1, 0]).unwrap()), Ok(false));
        let q2 = SurfaceModel::<i64>::quadric_deg2_blowup();
        assert_eq!(is_effective(&DivisorClass::new(&q2, vec![0, 1]).unwrap()), Ok(true));
        assert_eq!(is_effective(&DivisorClass::new(&q2, vec![-2, -1]).unwrap()), Ok(false));
    }
}
