use std::cmp::Ordering;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::hull::{angle_cmp, primitive, LatticePolygon};
use super::{LatticePoint, PolygonError, RationalPoint};
use crate::scalar::{ceil_ratio, floor_ratio, lift, Scalar};

/// `{x : ⟨normal, x⟩ ≥ offset}` with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfPlane<T: Scalar> {
    pub normal: LatticePoint<T>,
    pub offset: Ratio<T>,
}

impl<T: Scalar> HalfPlane<T> {
    pub fn new(normal: LatticePoint<T>, offset: Ratio<T>) -> Self {
        let g = num_integer::Integer::gcd(&normal[0], &normal[1]);
        if g.is_zero() || g.is_one() {
            return Self { normal, offset };
        }
        Self { normal: primitive(normal), offset: offset / lift(g) }
    }

    pub fn value(&self, p: &RationalPoint<T>) -> Ratio<T> {
        p[0].clone() * lift(self.normal[0].clone()) + p[1].clone() * lift(self.normal[1].clone())
    }

    pub fn contains(&self, p: &RationalPoint<T>) -> bool {
        self.value(p) >= self.offset
    }

    /// Intersection of the two boundary lines, if they are not parallel.
    fn meet(&self, other: &Self) -> Option<RationalPoint<T>> {
        let [a, b] = self.normal.clone();
        let [c, d] = other.normal.clone();
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        if det.is_zero() {
            return None;
        }
        let det = lift(det);
        let (e, f) = (self.offset.clone(), other.offset.clone());
        let x = (e.clone() * lift(d) - f.clone() * lift(b)) / det.clone();
        let y = (f * lift(a) - e * lift(c)) / det;
        Some([x, y])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Empty,
    Point,
    Segment,
    TwoDimensional,
}

/// Bounded intersection of rational half-planes, with its exact vertices.
///
/// Vertices of a 2-dimensional region run counterclockwise from the lowest
/// (then leftmost) one; a segment lists its endpoints in that same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolygon<T: Scalar> {
    halfplanes: Vec<HalfPlane<T>>,
    shape: Shape,
    vertices: Vec<RationalPoint<T>>,
}

fn rational_cross<T: Scalar>(o: &RationalPoint<T>, a: &RationalPoint<T>, b: &RationalPoint<T>) -> Ratio<T> {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}

fn lowest_first<T: Scalar>(a: &RationalPoint<T>, b: &RationalPoint<T>) -> Ordering {
    a[1].cmp(&b[1]).then_with(|| a[0].cmp(&b[0]))
}

/// True iff no nonzero direction `d` has `⟨n, d⟩ ≥ 0` for every normal.
fn normals_bound<T: Scalar>(halfplanes: &[HalfPlane<T>]) -> bool {
    if halfplanes.is_empty() {
        return false;
    }
    // The recession cone, if nontrivial, contains a direction along some
    // boundary line.
    halfplanes.iter().all(|h| {
        let along = [-h.normal[1].clone(), h.normal[0].clone()];
        [along.clone(), [-along[0].clone(), -along[1].clone()]].iter().all(|d| {
            halfplanes
                .iter()
                .any(|g| (g.normal[0].clone() * d[0].clone() + g.normal[1].clone() * d[1].clone()).is_negative())
        })
    })
}

impl<T: Scalar> RationalPolygon<T> {
    pub fn from_halfplanes(halfplanes: Vec<HalfPlane<T>>) -> Result<Self, PolygonError> {
        if !normals_bound(&halfplanes) {
            return Err(PolygonError::Unbounded);
        }
        let mut points: Vec<RationalPoint<T>> = Vec::new();
        for (i, h) in halfplanes.iter().enumerate() {
            for g in &halfplanes[i + 1..] {
                if let Some(p) = h.meet(g) {
                    if halfplanes.iter().all(|k| k.contains(&p)) && !points.contains(&p) {
                        points.push(p);
                    }
                }
            }
        }
        let (shape, vertices) = Self::arrange(points);
        Ok(Self { halfplanes, shape, vertices })
    }

    /// Classifies feasible corner points and puts them in canonical order.
    fn arrange(mut points: Vec<RationalPoint<T>>) -> (Shape, Vec<RationalPoint<T>>) {
        points.sort_by(lowest_first);
        match points.len() {
            0 => return (Shape::Empty, points),
            1 => return (Shape::Point, points),
            _ => {}
        }
        let base = points[0].clone();
        let far = points[points.len() - 1].clone();
        let collinear = points.iter().all(|p| rational_cross(&base, &far, p).is_zero());
        if collinear {
            // extreme points along the common line
            let key = |p: &RationalPoint<T>| {
                (p[0].clone() - base[0].clone()) * (far[0].clone() - base[0].clone())
                    + (p[1].clone() - base[1].clone()) * (far[1].clone() - base[1].clone())
            };
            let lo = points.iter().min_by(|a, b| key(a).cmp(&key(b))).unwrap().clone();
            let hi = points.iter().max_by(|a, b| key(a).cmp(&key(b))).unwrap().clone();
            let mut ends = vec![lo, hi];
            ends.sort_by(lowest_first);
            return (Shape::Segment, ends);
        }
        // Angular sort around the lowest point; all others lie in the upper
        // half-plane (or to the right on the same row).
        let rest = &mut points[1..];
        rest.sort_by(|a, b| {
            let c = rational_cross(&base, a, b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                let da = (a[0].clone() - base[0].clone()).abs() + (a[1].clone() - base[1].clone()).abs();
                let db = (b[0].clone() - base[0].clone()).abs() + (b[1].clone() - base[1].clone()).abs();
                da.cmp(&db)
            }
        });
        (Shape::TwoDimensional, points)
    }

    pub fn from_lattice_polygon(polygon: &LatticePolygon<T>) -> Self {
        let halfplanes = polygon.edges().iter().map(|e| HalfPlane::new(e.normal.clone(), lift(e.support.clone()))).collect();
        let vertices = polygon.vertices().iter().map(|v| [lift(v[0].clone()), lift(v[1].clone())]).collect();
        Self { halfplanes, shape: Shape::TwoDimensional, vertices }
    }

    /// Convex hull of lattice points as a half-plane system.
    pub fn from_lattice_hull(points: &[LatticePoint<T>]) -> Self {
        let hull = super::hull::convex_hull(points);
        let as_rational = |p: &LatticePoint<T>| -> RationalPoint<T> { [lift(p[0].clone()), lift(p[1].clone())] };
        match hull.len() {
            0 => Self { halfplanes: Vec::new(), shape: Shape::Empty, vertices: Vec::new() },
            1 => {
                let p = &hull[0];
                let one = T::one();
                let zero = T::zero();
                let halfplanes = vec![
                    HalfPlane::new([one.clone(), zero.clone()], lift(p[0].clone())),
                    HalfPlane::new([zero.clone(), one.clone()], lift(p[1].clone())),
                    HalfPlane::new([-one.clone(), zero.clone()], lift(-p[0].clone())),
                    HalfPlane::new([zero, -one], lift(-p[1].clone())),
                ];
                Self { halfplanes, shape: Shape::Point, vertices: vec![as_rational(p)] }
            }
            2 => {
                let (a, b) = (&hull[0], &hull[1]);
                let w = primitive([b[0].clone() - a[0].clone(), b[1].clone() - a[1].clone()]);
                let n = [-w[1].clone(), w[0].clone()];
                let dot = |v: &[T; 2], p: &LatticePoint<T>| v[0].clone() * p[0].clone() + v[1].clone() * p[1].clone();
                let mut halfplanes = vec![
                    HalfPlane::new(n.clone(), lift(dot(&n, a))),
                    HalfPlane::new([-n[0].clone(), -n[1].clone()], lift(-dot(&n, a))),
                    HalfPlane::new(w.clone(), lift(dot(&w, a))),
                    HalfPlane::new([-w[0].clone(), -w[1].clone()], lift(-dot(&w, b))),
                ];
                halfplanes.sort_by(|g, h| angle_cmp(&g.normal, &h.normal));
                Self { halfplanes, shape: Shape::Segment, vertices: vec![as_rational(a), as_rational(b)] }
            }
            _ => Self::from_lattice_polygon(&LatticePolygon::from_hull(hull)),
        }
    }

    pub fn halfplanes(&self) -> &[HalfPlane<T>] {
        &self.halfplanes
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn vertices(&self) -> &[RationalPoint<T>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.shape == Shape::Empty
    }

    pub fn contains(&self, p: &RationalPoint<T>) -> bool {
        self.halfplanes.iter().all(|h| h.contains(p))
    }

    /// Integer vertex coordinates, if every vertex is a lattice point.
    pub fn lattice_vertices(&self) -> Result<Vec<LatticePoint<T>>, PolygonError> {
        self.vertices
            .iter()
            .map(|v| {
                if v[0].is_integer() && v[1].is_integer() {
                    Ok([v[0].to_integer(), v[1].to_integer()])
                } else {
                    Err(PolygonError::NonLatticeVertices(format!("{}, {}", v[0], v[1])))
                }
            })
            .collect()
    }

    /// Same point set (compared through the canonical vertex lists).
    pub fn same_set(&self, other: &Self) -> bool {
        self.shape == other.shape && self.vertices == other.vertices
    }
}

/// All integer points of `polygon`, in lexicographic order.
pub fn lattice_points<T: Scalar>(polygon: &RationalPolygon<T>) -> Vec<LatticePoint<T>> {
    if polygon.is_empty() {
        return Vec::new();
    }
    let xs = polygon.vertices.iter().map(|v| v[0].clone());
    let ys = polygon.vertices.iter().map(|v| v[1].clone());
    let x0 = ceil_ratio(&xs.clone().min().unwrap());
    let x1 = floor_ratio(&xs.max().unwrap());
    let y0 = ceil_ratio(&ys.clone().min().unwrap());
    let y1 = floor_ratio(&ys.max().unwrap());
    let mut out = Vec::new();
    let mut x = x0;
    while x <= x1 {
        let mut y = y0.clone();
        while y <= y1 {
            if polygon.contains(&[lift(x.clone()), lift(y.clone())]) {
                out.push([x.clone(), y.clone()]);
            }
            y = y + T::one();
        }
        x = x + T::one();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn hp(n: [i64; 2], num: i64, den: i64) -> HalfPlane<i64> {
        HalfPlane::new(n, frac(num, den))
    }

    #[test]
    fn shapes_from_halfplanes() {
        let point = RationalPolygon::from_halfplanes(vec![hp([1, 0], 1, 1), hp([0, 1], 1, 1), hp([-1, 0], -1, 1), hp([0, -1], -1, 1)]).unwrap();
        assert_eq!(point.shape(), Shape::Point);
        assert_eq!(point.vertices(), &[[frac(1, 1), frac(1, 1)]]);

        let segment = RationalPolygon::from_halfplanes(vec![hp([1, 0], 3, 2), hp([0, 1], 3, 2), hp([-1, 0], -7, 2), hp([0, -1], -3, 2)]).unwrap();
        assert_eq!(segment.shape(), Shape::Segment);
        assert_eq!(segment.vertices(), &[[frac(3, 2), frac(3, 2)], [frac(7, 2), frac(3, 2)]]);

        let empty = RationalPolygon::from_halfplanes(vec![hp([1, 0], 1, 1), hp([0, 1], 1, 1), hp([-1, -1], -1, 1)]).unwrap();
        assert_eq!(empty.shape(), Shape::Empty);

        let tri = RationalPolygon::from_halfplanes(vec![hp([1, 0], 0, 1), hp([0, 1], 0, 1), hp([-1, -1], -1, 2)]).unwrap();
        assert_eq!(tri.shape(), Shape::TwoDimensional);
        assert_eq!(tri.vertices(), &[[frac(0, 1), frac(0, 1)], [frac(1, 2), frac(0, 1)], [frac(0, 1), frac(1, 2)]]);
    }

    #[test]
    fn unbounded_systems_rejected() {
        assert_eq!(RationalPolygon::from_halfplanes(vec![hp([1, 0], 0, 1), hp([0, 1], 0, 1)]), Err(PolygonError::Unbounded));
        assert_eq!(RationalPolygon::from_halfplanes(vec![hp([1, 0], 0, 1), hp([-1, 0], -1, 1)]), Err(PolygonError::Unbounded));
        assert_eq!(RationalPolygon::<i64>::from_halfplanes(vec![]), Err(PolygonError::Unbounded));
    }

    #[test]
    fn non_primitive_normals_are_reduced() {
        let h = hp([2, 4], 3, 1);
        assert_eq!(h.normal, [1, 2]);
        assert_eq!(h.offset, frac(3, 2));
    }

    #[test]
    fn lattice_point_listing() {
        let seg = RationalPolygon::from_lattice_hull(&[[0i64, 0], [3, 0]]);
        assert_eq!(seg.shape(), Shape::Segment);
        assert_eq!(lattice_points(&seg), vec![[0, 0], [1, 0], [2, 0], [3, 0]]);
        let pt = RationalPolygon::from_lattice_hull(&[[1i64, 1]]);
        assert_eq!(lattice_points(&pt), vec![[1, 1]]);
        let sq = RationalPolygon::from_lattice_hull(&[[0i64, 0], [2, 0], [0, 2], [2, 2]]);
        assert_eq!(lattice_points(&sq).len(), 9);
        // a rebuilt system lands on the same vertices
        let again = RationalPolygon::from_halfplanes(sq.halfplanes().to_vec()).unwrap();
        assert!(again.same_set(&sq));
        let again = RationalPolygon::from_halfplanes(seg.halfplanes().to_vec()).unwrap();
        assert!(again.same_set(&seg));
    }
}
