//! Levels by direct search over small denominators.

use num_rational::Ratio;
use num_traits::Zero;

use super::fatpoint::class_dim;
use super::OracleError;
use crate::picard::DivisorClass;
use crate::polygon::LatticePolygon;
use crate::scalar::{lift, to_i64, Scalar};

/// Whether `{x : ⟨nₑ, x⟩ ≥ q·aₑ + p}` has a point. A nonempty bounded
/// figure has a vertex, so it suffices to try every crossing of two
/// boundary lines.
pub fn offset_nonempty<T: Scalar>(polygon: &LatticePolygon<T>, q: &T, p: &T) -> bool {
    let lines: Vec<([T; 2], T)> = polygon
        .edges()
        .iter()
        .map(|e| (e.normal.clone(), q.clone() * e.support.clone() + p.clone()))
        .collect();
    let inside = |x: &Ratio<T>, y: &Ratio<T>| {
        lines.iter().all(|(n, c)| x.clone() * lift(n[0].clone()) + y.clone() * lift(n[1].clone()) >= lift(c.clone()))
    };
    for (i, (n, c)) in lines.iter().enumerate() {
        for (m, d) in &lines[i + 1..] {
            let det = n[0].clone() * m[1].clone() - n[1].clone() * m[0].clone();
            if det.is_zero() {
                continue;
            }
            // Cramer's rule for n·x = c, m·x = d
            let x = Ratio::new(c.clone() * m[1].clone() - n[1].clone() * d.clone(), det.clone());
            let y = Ratio::new(n[0].clone() * d.clone() - c.clone() * m[0].clone(), det);
            if inside(&x, &y) {
                return true;
            }
        }
    }
    false
}

/// `max over 1 ≤ q ≤ q_max of (max p ≥ 0 with the offset figure nonempty) / q`.
pub fn polygon_level_oracle<T: Scalar>(polygon: &LatticePolygon<T>, q_max: u32) -> Ratio<T> {
    let mut best = Ratio::zero();
    for q in 1..=q_max {
        let q = T::of(q.into());
        let mut p = T::zero();
        while offset_nonempty(polygon, &q, &(p.clone() + T::one())) {
            p = p + T::one();
        }
        let candidate = Ratio::new(p, q);
        if candidate > best {
            best = candidate;
        }
    }
    best
}

/// `max over 1 ≤ q ≤ q_max of (max p ≥ 0 with qD + pK effective) / q`, for
/// any effectivity test. `−K` is effective on every supported model, so the
/// effective `p` form an initial segment; the scan stops at the first gap.
pub fn divisor_level_oracle<T: Scalar, E>(
    divisor: &DivisorClass<T>,
    q_max: u32,
    mut effective: impl FnMut(&DivisorClass<T>) -> Result<bool, E>,
) -> Result<Ratio<T>, E> {
    let mut best = Ratio::zero();
    for q in 1..=q_max {
        let q = T::of(q.into());
        let mut p = T::zero();
        while effective(&divisor.plus_canonical(&q, &(p.clone() + T::one())))? {
            p = p + T::one();
        }
        let candidate = Ratio::new(p, q);
        if candidate > best {
            best = candidate;
        }
    }
    Ok(best)
}

/// Effectivity of `(d; m)` on a plane blowup at general points, from the
/// interpolation rank alone.
pub fn effectivity_oracle<T: Scalar>(divisor: &DivisorClass<T>, seed: u64) -> Result<bool, OracleError> {
    let (d, m) = divisor
        .degree_multiplicities()
        .ok_or_else(|| OracleError::Unsupported(format!("{} is not a plane blowup", divisor.model().kind())))?;
    let small = |v: &T| to_i64(v).ok_or_else(|| OracleError::Unsupported(format!("coefficient {v} out of range")));
    let d = small(&d)?;
    let m = m.iter().map(small).collect::<Result<Vec<i64>, _>>()?;
    Ok(class_dim(d, &m, seed) >= 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{is_effective, SurfaceModel};
    use crate::polygon::level_keel;
    use crate::scalar::frac;

    fn polygon(points: &[[i64; 2]]) -> LatticePolygon<i64> {
        LatticePolygon::normalize(points).unwrap()
    }

    #[test]
    fn polygon_levels() {
        assert_eq!(polygon_level_oracle(&polygon(&[[0, 0], [6, 0], [0, 6]]), 12), frac(2, 1));
        assert_eq!(polygon_level_oracle(&polygon(&[[0, 0], [3, 0], [3, 5], [0, 5]]), 12), frac(3, 2));
        assert_eq!(polygon_level_oracle(&polygon(&[[0, 0], [1, 0], [1, 1], [0, 1]]), 12), frac(1, 2));
        let t8 = polygon(&[[0, 0], [8, 0], [0, 8]]);
        assert_eq!(polygon_level_oracle(&t8, 24), level_keel(&t8).level);
    }

    #[test]
    fn plane_blowup_classes() {
        let s2 = SurfaceModel::<i64>::plane_blowup(2).unwrap();
        let s3 = SurfaceModel::<i64>::plane_blowup(3).unwrap();
        let s5 = SurfaceModel::<i64>::plane_blowup(5).unwrap();
        let class = |s, d, m: &[i64]| DivisorClass::from_degree_multiplicities(s, d, m).unwrap();
        assert!(effectivity_oracle(&class(&s2, 1, &[1, 1]), 1).unwrap());
        assert!(!effectivity_oracle(&class(&s3, 1, &[1, 1, 1]), 1).unwrap());
        assert!(effectivity_oracle(&class(&s5, 2, &[1, 1, 1, 1, 1]), 1).unwrap());
        let hirzebruch = SurfaceModel::<i64>::hirzebruch(2).unwrap();
        assert!(effectivity_oracle(&DivisorClass::zero(&hirzebruch), 1).is_err());
    }

    #[test]
    fn divisor_level_by_search() {
        let p2 = SurfaceModel::<i64>::plane_blowup(0).unwrap();
        let d = DivisorClass::new(&p2, vec![5]).unwrap();
        assert_eq!(divisor_level_oracle(&d, 12, is_effective).unwrap(), frac(5, 3));
        let q = SurfaceModel::<i64>::quadric();
        let d = DivisorClass::new(&q, vec![3, 7]).unwrap();
        assert_eq!(divisor_level_oracle(&d, 12, is_effective).unwrap(), frac(3, 2));
    }
}
