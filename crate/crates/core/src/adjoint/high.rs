//! A family of surfaces of degree `2n + 1` whose parametric degree grows
//! quadratically in `n`: `z^{2n+1} − x²w^{2n−1} − yⁿw^{n+1} = 0` for odd
//! `n ≥ 5`, with a known parametrization of degree `n² + 1`.

use num_rational::Ratio;
use serde::Serialize;

use super::AdjointError;
use crate::scalar::{lift, Scalar};

/// `count` base points of multiplicity `multiplicity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasePointGroup {
    pub count: i64,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighExampleReport<T: Scalar> {
    pub n: i64,
    pub level: Ratio<T>,
    pub keel: Ratio<T>,
    pub lower: Ratio<T>,
    pub upper: Ratio<T>,
    pub param_degree: T,
    /// `lower ≤ param_degree ≤ upper`.
    pub sandwich: bool,
    /// Base points of the parametrization, infinitely near ones included.
    pub base_points: Vec<BasePointGroup>,
    /// `H² = (n²+1)² − Σ m²`, which must equal the degree `2n + 1`.
    pub hyperplane_square: T,
    /// Degree of the forms in `|qH + pK|` at `(q, p) = (2, 2n+1)`.
    pub level_system_degree: T,
    /// Nonzero multiplicities of that system, with their counts.
    pub level_system_conditions: Vec<BasePointGroup>,
    /// Keel recomputed from the level system.
    pub keel_from_system: Ratio<T>,
    /// `qH + pK` has forms exactly when `2p ≤ slope·q`.
    pub feasibility_slope: T,
}

pub fn example_high_report<T: Scalar>(n: i64) -> Result<HighExampleReport<T>, AdjointError> {
    if n < 5 || n % 2 == 0 {
        return Err(AdjointError::BadN(n));
    }
    let t = |v: i64| T::of(v);
    let level = Ratio::new(t(2 * n + 1), t(2));
    let keel = Ratio::new(t(2 * n * n - 5 * n - 5), t(4));
    let lower = Ratio::new(t(2 * n * n + 7 * n + 1), t(4));
    let upper = lift(t(6)) * level.clone() + lift(t(2)) * keel.clone();
    let param_degree = t(n * n + 1);
    let sandwich = lower <= lift(param_degree.clone()) && lift(param_degree.clone()) <= upper;

    let base_points = vec![
        BasePointGroup { count: 1, multiplicity: n * n - 2 * n },
        BasePointGroup { count: (n - 3) / 2, multiplicity: 2 * n },
        BasePointGroup { count: 2 * n + 3, multiplicity: n },
        BasePointGroup { count: n * n - 2 * n, multiplicity: 1 },
    ];
    let hyperplane_square = base_points
        .iter()
        .fold(t((n * n + 1) * (n * n + 1)), |acc, g| acc - t(g.count * g.multiplicity * g.multiplicity));

    // |qH + pK|: forms of degree q(n²+1) − 3p, multiplicity q·r − p at an r-fold point
    let (q, p) = (2, 2 * n + 1);
    let level_system_degree = t(q * (n * n + 1) - 3 * p);
    let level_system_conditions: Vec<BasePointGroup> = base_points
        .iter()
        .filter(|g| q * g.multiplicity - p > 0)
        .map(|g| BasePointGroup { count: g.count, multiplicity: q * g.multiplicity - p })
        .collect();
    // forms whose degree equals the multiplicity at the big point split into lines
    // through it; the conditions at the 2n-fold points fix some of those lines
    let mut keel_from_system = Ratio::new(level_system_degree.clone(), t(q));
    for g in level_system_conditions.iter().filter(|g| g.multiplicity != q * (n * n - 2 * n) - p) {
        keel_from_system = keel_from_system - Ratio::new(t(g.count * g.multiplicity), t(q));
    }
    Ok(HighExampleReport {
        n,
        level,
        keel,
        lower,
        upper,
        param_degree,
        sandwich,
        base_points,
        hyperplane_square,
        level_system_degree,
        level_system_conditions,
        keel_from_system,
        feasibility_slope: t(2 * n + 1),
    })
}
