use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::hull::{primitive, LatticePolygon};
use super::rational::{lattice_points, HalfPlane, RationalPolygon, Shape};
use super::PolygonError;
use crate::scalar::{common_denominator, lift, Scalar};

/// Level and keel of a lattice polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonInvariants<T: Scalar> {
    pub level: Ratio<T>,
    pub keel: Ratio<T>,
    /// The last nonempty offset figure, a point or a segment.
    pub optimal_face: RationalPolygon<T>,
    /// Lowest-terms denominator of `level`.
    pub denominator: T,
}

/// The figure of `qD + pK`: every edge of `q·Γ` moved `p` lattice steps inward.
pub fn offset_scale<T: Scalar>(polygon: &LatticePolygon<T>, q: &T, p: &T) -> RationalPolygon<T> {
    offset_by(polygon, |support| lift(q.clone() * support.clone() + p.clone()))
}

fn offset_by<T: Scalar>(polygon: &LatticePolygon<T>, offset: impl Fn(&T) -> Ratio<T>) -> RationalPolygon<T> {
    let halfplanes = polygon.edges().iter().map(|e| HalfPlane::new(e.normal.clone(), offset(&e.support))).collect();
    RationalPolygon::from_halfplanes(halfplanes).expect("edge normals of a polygon bound every offset")
}

/// Convex hull of the lattice points strictly inside `polygon`.
pub fn interior_hull<T: Scalar>(polygon: &LatticePolygon<T>) -> RationalPolygon<T> {
    RationalPolygon::from_lattice_hull(&polygon.interior_points())
}

/// 3×3 determinant.
fn det3<T: Scalar>(m: &[[Ratio<T>; 3]; 3]) -> Ratio<T> {
    m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
        - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
        + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
}

/// Maximal `t` with `{x : ⟨nₑ, x⟩ ≥ aₑ + t}` nonempty.
///
/// The feasible region in `(x, y, t)` is a pointed polyhedron, so the maximum
/// sits at a vertex cut out by three active constraints; all triples are
/// enumerated and solved exactly by Cramer's rule.
fn max_offset<T: Scalar>(polygon: &LatticePolygon<T>) -> Ratio<T> {
    let rows: Vec<([Ratio<T>; 3], Ratio<T>)> = polygon
        .edges()
        .iter()
        .map(|e| ([lift(e.normal[0].clone()), lift(e.normal[1].clone()), -Ratio::one()], lift(e.support.clone())))
        .collect();
    let feasible = |x: &[Ratio<T>; 3]| {
        rows.iter().all(|(row, rhs)| {
            row[0].clone() * x[0].clone() + row[1].clone() * x[1].clone() + row[2].clone() * x[2].clone() >= *rhs
        })
    };
    let mut best: Option<Ratio<T>> = None;
    let n = rows.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let m = [rows[i].0.clone(), rows[j].0.clone(), rows[k].0.clone()];
                let det = det3(&m);
                if det.is_zero() {
                    continue;
                }
                let rhs = [rows[i].1.clone(), rows[j].1.clone(), rows[k].1.clone()];
                let solve_col = |c: usize| {
                    let mut mc = m.clone();
                    for r in 0..3 {
                        mc[r][c] = rhs[r].clone();
                    }
                    det3(&mc) / det.clone()
                };
                let x = [solve_col(0), solve_col(1), solve_col(2)];
                if feasible(&x) && best.as_ref().is_none_or(|b| x[2] > *b) {
                    best = Some(x[2].clone());
                }
            }
        }
    }
    best.expect("a 2-dimensional polygon has an optimal vertex")
}

/// Lattice length of the segment `a → b`: the `λ` with `b − a = λ·w`, `w`
/// primitive integral.
pub(crate) fn lattice_length<T: Scalar>(a: &[Ratio<T>; 2], b: &[Ratio<T>; 2]) -> Ratio<T> {
    let d = [b[0].clone() - a[0].clone(), b[1].clone() - a[1].clone()];
    let den = common_denominator(&d);
    let scaled = [(d[0].clone() * lift(den.clone())).to_integer(), (d[1].clone() * lift(den.clone())).to_integer()];
    let w = primitive(scaled);
    if !w[0].is_zero() {
        (d[0].clone() / lift(w[0].clone())).abs()
    } else {
        (d[1].clone() / lift(w[1].clone())).abs()
    }
}

/// Level and keel by exact linear programming over the offset family.
pub fn level_keel<T: Scalar>(polygon: &LatticePolygon<T>) -> PolygonInvariants<T> {
    let level = max_offset(polygon);
    let optimal_face = offset_by(polygon, |support| lift(support.clone()) + level.clone());
    let keel = match optimal_face.shape() {
        Shape::Point => Ratio::zero(),
        Shape::Segment => lattice_length(&optimal_face.vertices()[0], &optimal_face.vertices()[1]),
        other => unreachable!("face at maximal offset has shape {other:?}"),
    };
    let denominator = level.denom().clone();
    PolygonInvariants { level, keel, optimal_face, denominator }
}

/// Number of moving components of the class a lattice figure stands for:
/// `0` for a point, the number of lattice steps for a segment, `1` for a
/// 2-dimensional figure.
pub fn nmc_polygon<T: Scalar>(polygon: &RationalPolygon<T>) -> Result<T, PolygonError> {
    let vertices = polygon.lattice_vertices()?;
    Ok(match polygon.shape() {
        Shape::Empty | Shape::Point => T::zero(),
        Shape::Segment => {
            let (a, b) = (&vertices[0], &vertices[1]);
            (b[0].clone() - a[0].clone()).gcd(&(b[1].clone() - a[1].clone()))
        }
        Shape::TwoDimensional => T::one(),
    })
}

/// Count-based keel reading at one representation `(q, p)` of the level:
/// `(#lattice points of the figure − 1) / q`.
pub fn keel_by_count<T: Scalar>(polygon: &LatticePolygon<T>, q: &T, p: &T) -> Ratio<T> {
    let figure = offset_scale(polygon, q, p);
    let count = lattice_points(&figure).len() as i64;
    Ratio::new(T::of(count - 1), q.clone())
}
