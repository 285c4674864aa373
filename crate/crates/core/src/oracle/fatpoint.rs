//! Linear systems of plane curves through fat points, by brute-force
//! interpolation: one row per vanishing derivative, one column per monomial.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::Ratio;
use num_traits::{Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::OracleError;
use crate::linalg::rank;

/// Rational point of the affine chart `z = 1`.
pub type RationalPair = (Ratio<BigInt>, Ratio<BigInt>);

/// Forms of degree `degree` vanishing to order `multiplicities[i]` at
/// `points[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPointProblem {
    degree: u32,
    points: Vec<RationalPair>,
    multiplicities: Vec<u32>,
}

impl FatPointProblem {
    /// Checks that the lists match and the points are pairwise distinct.
    pub fn new(degree: u32, points: Vec<RationalPair>, multiplicities: Vec<u32>) -> Result<Self, OracleError> {
        if points.len() != multiplicities.len() {
            return Err(OracleError::Invalid(format!(
                "{} points but {} multiplicities",
                points.len(),
                multiplicities.len()
            )));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(OracleError::Invalid(format!("point {i} repeats an earlier point")));
            }
        }
        Ok(Self { degree, points, multiplicities })
    }

    /// Points drawn from `seed`: numerators in `[-60, 60]`, denominators in
    /// `[1, 9]`, redrawn on collision.
    pub fn general(degree: u32, multiplicities: Vec<u32>, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coordinate = |rng: &mut ChaCha8Rng| {
            Ratio::new(BigInt::from(rng.gen_range(-60i64..=60)), BigInt::from(rng.gen_range(1i64..=9)))
        };
        let mut points: Vec<RationalPair> = Vec::with_capacity(multiplicities.len());
        while points.len() < multiplicities.len() {
            let p = (coordinate(&mut rng), coordinate(&mut rng));
            if !points.contains(&p) {
                points.push(p);
            }
        }
        Self { degree, points, multiplicities }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn points(&self) -> &[RationalPair] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// `binom(d+2, 2)`.
    pub fn monomial_count(&self) -> usize {
        let d = self.degree as usize;
        (d + 1) * (d + 2) / 2
    }

    /// `Σ binom(mᵢ+1, 2)`.
    pub fn condition_count(&self) -> usize {
        self.multiplicities.iter().map(|&m| (m as usize) * (m as usize + 1) / 2).sum()
    }

    /// Integer conditions matrix. A point `(a/c, b/c)` in homogeneous form
    /// `(a, b, c)` gives, for `α + β < m` and the monomial `xⁱ yʲ z^{d−i−j}`,
    /// the entry `C(i,α) C(j,β) a^{i−α} b^{j−β} c^{d−i−j}`: the Hasse
    /// derivative `∂ₓ^α ∂ᵧ^β` of the form at `(a, b, c)`, which is the affine
    /// derivative times `c^{d−α−β}`.
    pub fn conditions(&self) -> Vec<Vec<BigInt>> {
        let d = self.degree;
        let monomials: Vec<(u32, u32)> = (0..=d).flat_map(|i| (0..=d - i).map(move |j| (i, j))).collect();
        let mut rows = Vec::with_capacity(self.condition_count());
        for ((x, y), &m) in self.points.iter().zip(&self.multiplicities) {
            let c = x.denom() * y.denom();
            let a = x.numer() * y.denom();
            let b = y.numer() * x.denom();
            for alpha in 0..m {
                for beta in 0..m - alpha {
                    let row = monomials
                        .iter()
                        .map(|&(i, j)| {
                            if i < alpha || j < beta {
                                return BigInt::zero();
                            }
                            binomial(BigInt::from(i), BigInt::from(alpha))
                                * binomial(BigInt::from(j), BigInt::from(beta))
                                * Pow::pow(&a, i - alpha)
                                * Pow::pow(&b, j - beta)
                                * Pow::pow(&c, d - i - j)
                        })
                        .collect();
                    rows.push(row);
                }
            }
        }
        rows
    }
}

/// Projective dimension of the system: `binom(d+2,2) − rank − 1`, with `−1`
/// for the empty system.
pub fn fatpoint_dim(problem: &FatPointProblem) -> i64 {
    let rows = problem.conditions();
    problem.monomial_count() as i64 - rank(&rows) as i64 - 1
}

/// [`fatpoint_dim`] at general points, made robust against special samples.
///
/// A special configuration can only raise the dimension, so the answer is
/// the smallest value seen; sampling continues until that value has been
/// observed on two independent point sets (at most eight draws).
pub fn fatpoint_dim_general(degree: u32, multiplicities: &[u32], seed: u64) -> i64 {
    let mut values = Vec::new();
    for draw in 0..8u64 {
        let problem = FatPointProblem::general(degree, multiplicities.to_vec(), seed.wrapping_add(draw.wrapping_mul(0x9E37_79B9)));
        values.push(fatpoint_dim(&problem));
        let least = *values.iter().min().expect("one value drawn");
        if values.iter().filter(|&&v| v == least).count() >= 2 {
            return least;
        }
    }
    *values.iter().min().expect("eight values drawn")
}

/// Sorted nonzero multiplicities: the dimension depends on nothing else.
pub fn multiplicity_key(multiplicities: &[i64]) -> Vec<u32> {
    let mut key: Vec<u32> = multiplicities.iter().filter(|&&m| m > 0).map(|&m| m as u32).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    key
}

/// `h⁰ − 1` of `dL − Σ mᵢEᵢ` on a blowup of the plane at general points.
/// Negative `mᵢ` are fixed components and drop out.
pub fn class_dim(degree: i64, multiplicities: &[i64], seed: u64) -> i64 {
    if degree < 0 {
        return -1;
    }
    fatpoint_dim_general(degree as u32, &multiplicity_key(multiplicities), seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_systems() {
        assert_eq!(fatpoint_dim_general(1, &[1], 7), 1);
        assert_eq!(fatpoint_dim_general(2, &[1; 5], 7), 0);
        assert_eq!(fatpoint_dim_general(1, &[1; 3], 7), -1);
        assert_eq!(fatpoint_dim_general(3, &[1; 6], 7), 3);
        // conics singular at two points: the double line
        assert_eq!(fatpoint_dim_general(2, &[2, 2], 7), 0);
        // five double points impose one condition too few on quartics
        assert_eq!(fatpoint_dim_general(4, &[2; 5], 7), 0);
        assert_eq!(fatpoint_dim_general(0, &[], 7), 0);
        assert_eq!(fatpoint_dim_general(0, &[1], 7), -1);
    }

    #[test]
    fn collinear_points_are_special() {
        let p = |x: i64, y: i64| (Ratio::from_integer(BigInt::from(x)), Ratio::from_integer(BigInt::from(y)));
        let problem = FatPointProblem::new(1, vec![p(0, 0), p(1, 1), p(2, 2)], vec![1, 1, 1]).unwrap();
        assert_eq!(fatpoint_dim(&problem), 0);
        assert!(FatPointProblem::new(1, vec![p(0, 0), p(0, 0)], vec![1, 1]).is_err());
        assert!(FatPointProblem::new(1, vec![p(0, 0)], vec![1, 1]).is_err());
    }

    #[test]
    fn fixed_parts_and_negative_degree() {
        assert_eq!(class_dim(1, &[1, -2], 3), 1);
        assert_eq!(class_dim(-1, &[0], 3), -1);
        assert_eq!(class_dim(0, &[-1], 3), 0);
    }
}
