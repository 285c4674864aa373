//! Small exact linear algebra: ranks, solves, inertia and unimodular
//! completions. Matrices are row-major `Vec<Vec<_>>`; sizes here never
//! exceed a few dozen rows.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::scalar::{common_denominator, Scalar};

pub type IntMatrix<T> = Vec<Vec<T>>;

pub fn identity<T: Scalar>(n: usize) -> IntMatrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `m · v`.
pub fn mat_vec<T: Scalar>(m: &IntMatrix<T>, v: &[T]) -> Vec<T> {
    m.iter().map(|row| dot(row, v)).collect()
}

/// `m · n`.
pub fn mat_mul<T: Scalar>(m: &IntMatrix<T>, n: &IntMatrix<T>) -> IntMatrix<T> {
    let cols = n.first().map_or(0, Vec::len);
    m.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(n).fold(T::zero(), |acc, (a, r)| acc + a.clone() * r[j].clone()))
                .collect()
        })
        .collect()
}

pub fn transpose<T: Scalar>(m: &IntMatrix<T>) -> IntMatrix<T> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// `aᵀ · g · b`.
pub fn bilinear<T: Scalar>(gram: &IntMatrix<T>, a: &[T], b: &[T]) -> T {
    dot(a, &mat_vec(gram, b))
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut m: Vec<Vec<T>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col..n_cols {
                // exact by Sylvester's identity
                row[j] = (p.clone() * row[j].clone() - factor.clone() * pivot_row[j].clone()) / prev.clone();
            }
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix (rows are scaled to integers first).
pub fn rank_rational<T: Scalar>(rows: &[Vec<Ratio<T>>]) -> usize {
    let scaled: Vec<Vec<T>> = rows
        .iter()
        .map(|row| {
            let den = common_denominator(row);
            row.iter().map(|x| (x * Ratio::from_integer(den.clone())).to_integer()).collect()
        })
        .collect();
    rank(&scaled)
}

/// Solves the square system `a · x = b`; `None` when `a` is singular.
pub fn solve<T: Scalar>(a: &[Vec<Ratio<T>>], b: &[Ratio<T>]) -> Option<Vec<Ratio<T>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<T>>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut row = row.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for entry in m[col].iter_mut() {
            *entry = entry.clone() / p.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in col..=n {
                    let delta = factor.clone() * m[col][j].clone();
                    m[r][j] = m[r][j].clone() - delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Numbers of positive, negative and zero squares of a symmetric form
/// (Sylvester's law of inertia, by symmetric elimination over the rationals).
pub fn inertia<T: Scalar>(gram: &IntMatrix<T>) -> (usize, usize, usize) {
    let n = gram.len();
    let mut m: Vec<Vec<Ratio<T>>> =
        gram.iter().map(|row| row.iter().cloned().map(Ratio::from_integer).collect()).collect();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        if let Some(&p) = active.iter().find(|&&i| !m[i][i].is_zero()) {
            let pivot = m[p][p].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != p);
            for &i in &active {
                let factor = m[i][p].clone() / pivot.clone();
                for &j in &active {
                    let delta = factor.clone() * m[p][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
            continue;
        }
        // Zero diagonal: fold an off-diagonal partner into a row/column.
        let pair = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i != j && !m[i][j].is_zero());
        match pair {
            Some((i, j)) => {
                for k in 0..n {
                    let add = m[j][k].clone();
                    m[i][k] = m[i][k].clone() + add;
                }
                for k in 0..n {
                    let add = m[k][j].clone();
                    m[k][i] = m[k][i].clone() + add;
                }
            }
            None => break,
        }
    }
    (pos, neg, n - pos - neg)
}

/// Extended Euclid: `(g, x, y)` with `x·a + y·b = g ≥ 0`.
pub fn extended_gcd<T: Scalar>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Unimodular `u` (with inverse) such that `row · u = (g, 0, …, 0)`,
/// `g = gcd(row)`. The trailing columns of `u` span the integer kernel of
/// the functional `x ↦ row · x`.
pub fn unimodular_completion<T: Scalar>(row: &[T]) -> (IntMatrix<T>, IntMatrix<T>) {
    let n = row.len();
    let mut v = row.to_vec();
    let mut u = identity::<T>(n);
    let mut u_inv = identity::<T>(n);
    for j in 1..n {
        if v[j].is_zero() {
            continue;
        }
        let (g, x, y) = extended_gcd(&v[0], &v[j]);
        let a = x;
        let b = -(v[j].clone() / g.clone());
        let c = y;
        let d = v[0].clone() / g.clone();
        // columns 0 and j of u go through [[a, b], [c, d]] (det 1)
        for r in u.iter_mut() {
            let (c0, cj) = (r[0].clone(), r[j].clone());
            r[0] = c0.clone() * a.clone() + cj.clone() * c.clone();
            r[j] = c0 * b.clone() + cj * d.clone();
        }
        // rows 0 and j of the inverse go through [[d, -b], [-c, a]]
        for k in 0..n {
            let (r0, rj) = (u_inv[0][k].clone(), u_inv[j][k].clone());
            u_inv[0][k] = d.clone() * r0.clone() - b.clone() * rj.clone();
            u_inv[j][k] = a.clone() * rj - c.clone() * r0;
        }
        v[0] = g;
        v[j] = T::zero();
    }
    if v[0].is_negative() {
        for r in u.iter_mut() {
            r[0] = -r[0].clone();
        }
        for k in 0..n {
            u_inv[0][k] = -u_inv[0][k].clone();
        }
    }
    (u, u_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use num_bigint::BigInt;

    #[test]
    fn bareiss_rank() {
        let m: Vec<Vec<i64>> = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&m), 2);
        let m: Vec<Vec<BigInt>> =
            vec![vec![2.into(), 0.into()], vec![0.into(), 3.into()], vec![1.into(), 1.into()]];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank::<i64>(&[vec![0, 0]]), 0);
        assert_eq!(rank::<i64>(&[]), 0);
    }

    #[test]
    fn rational_solve() {
        let a = vec![vec![frac::<i64>(2, 1), frac(1, 1)], vec![frac(1, 1), frac(3, 1)]];
        let b = vec![frac(3, 1), frac(5, 2)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![frac(13, 10), frac(2, 5)]);
        let singular = vec![vec![frac::<i64>(1, 1), frac(2, 1)], vec![frac(2, 1), frac(4, 1)]];
        assert!(solve(&singular, &b).is_none());
    }

    #[test]
    fn inertia_of_lattices() {
        assert_eq!(inertia::<i64>(&vec![vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]), (1, 2, 0));
        assert_eq!(inertia::<i64>(&vec![vec![0, 1], vec![1, 0]]), (1, 1, 0));
        assert_eq!(inertia::<i64>(&vec![vec![-2, 1], vec![1, 0]]), (1, 1, 0));
        assert_eq!(inertia::<i64>(&vec![vec![0, 0], vec![0, 0]]), (0, 0, 2));
    }

    #[test]
    fn completion_is_unimodular_and_kills_row() {
        for row in [vec![3i64, 5, 7], vec![0, -4, 6], vec![1, -1, -1, 0], vec![-2, 0]] {
            let (u, u_inv) = unimodular_completion(&row);
            assert_eq!(mat_mul(&u, &u_inv), identity::<i64>(row.len()));
            let image: Vec<i64> = (0..row.len()).map(|j| row.iter().zip(&u).map(|(a, r)| a * r[j]).sum()).collect();
            assert_eq!(image[0], content(&row));
            assert!(image[1..].iter().all(|&x| x == 0));
        }
    }

    use crate::scalar::content;
}
