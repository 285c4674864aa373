use std::cmp::Ordering;

use serde::Serialize;

use super::{LatticePoint, PolygonError};
use crate::scalar::Scalar;

/// One edge `{x : ⟨normal, x⟩ ≥ support}` with a primitive inner normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PolygonEdge<T> {
    pub normal: LatticePoint<T>,
    pub support: T,
}

/// Convex lattice polygon with positive area.
///
/// Vertices run counterclockwise from the lowest (then leftmost) vertex with
/// no three consecutive collinear. Edges are listed by the angle of their
/// inner normal, starting from direction `(1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolygon<T> {
    vertices: Vec<LatticePoint<T>>,
    edges: Vec<PolygonEdge<T>>,
}

pub(crate) fn cross<T: Scalar>(o: &LatticePoint<T>, a: &LatticePoint<T>, b: &LatticePoint<T>) -> T {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}

/// Divides out the content of an integer vector.
pub(crate) fn primitive<T: Scalar>(v: [T; 2]) -> [T; 2] {
    let g = v[0].gcd(&v[1]);
    if g.is_zero() {
        return v;
    }
    [v[0].clone() / g.clone(), v[1].clone() / g]
}

/// Counterclockwise angular order of nonzero vectors, starting at `(1, 0)`.
pub(crate) fn angle_cmp<T: Scalar>(a: &[T; 2], b: &[T; 2]) -> Ordering {
    let half = |v: &[T; 2]| -> u8 {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone();
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

fn lowest_key<T: Scalar>(p: &LatticePoint<T>) -> (T, T) {
    (p[1].clone(), p[0].clone())
}

/// Convex hull (Andrew's monotone chain) without collinear points.
///
/// Returns the extreme points counterclockwise from the lowest-leftmost one;
/// a single point or the two endpoints of a segment for degenerate input.
pub fn convex_hull<T: Scalar>(points: &[LatticePoint<T>]) -> Vec<LatticePoint<T>> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[0].cmp(&b[0]).then_with(|| a[1].cmp(&b[1])));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<LatticePoint<T>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticePoint<T>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let mut hull = lower;
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.pop();
    }
    if let Some(start) = (0..hull.len()).min_by(|&i, &j| lowest_key(&hull[i]).cmp(&lowest_key(&hull[j]))) {
        hull.rotate_left(start);
    }
    hull
}

impl<T: Scalar> LatticePolygon<T> {
    /// Convex hull of `points` in canonical form.
    pub fn normalize(points: &[LatticePoint<T>]) -> Result<Self, PolygonError> {
        if points.is_empty() {
            return Err(PolygonError::EmptyInput);
        }
        let vertices = convex_hull(points);
        match vertices.len() {
            1 => return Err(PolygonError::DegenerateInput("a point")),
            2 => return Err(PolygonError::DegenerateInput("a segment")),
            _ => {}
        }
        Ok(Self::from_hull(vertices))
    }

    /// `vertices` must already be a strictly convex counterclockwise cycle.
    pub(crate) fn from_hull(vertices: Vec<LatticePoint<T>>) -> Self {
        let n = vertices.len();
        let mut edges: Vec<PolygonEdge<T>> = (0..n)
            .map(|i| {
                let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
                let normal = primitive([a[1].clone() - b[1].clone(), b[0].clone() - a[0].clone()]);
                let support = normal[0].clone() * a[0].clone() + normal[1].clone() * a[1].clone();
                PolygonEdge { normal, support }
            })
            .collect();
        edges.sort_by(|a, b| angle_cmp(&a.normal, &b.normal));
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> &[LatticePoint<T>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[PolygonEdge<T>] {
        &self.edges
    }

    /// Twice the area.
    pub fn double_area(&self) -> T {
        let n = self.vertices.len();
        (0..n).fold(T::zero(), |acc, i| {
            let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            acc + a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
        })
    }

    pub fn contains(&self, p: &LatticePoint<T>) -> bool {
        self.edges
            .iter()
            .all(|e| e.normal[0].clone() * p[0].clone() + e.normal[1].clone() * p[1].clone() >= e.support)
    }

    /// `s·Γ` for a positive integer `s`.
    pub fn scaled(&self, s: &T) -> Self {
        let vertices = self.vertices.iter().map(|v| [v[0].clone() * s.clone(), v[1].clone() * s.clone()]).collect();
        Self::from_hull(vertices)
    }

    /// Image under `x ↦ U·x + t`, for a unimodular `U`.
    pub fn transformed(&self, u: &[[T; 2]; 2], t: &LatticePoint<T>) -> Result<Self, PolygonError> {
        let image: Vec<LatticePoint<T>> = self
            .vertices
            .iter()
            .map(|v| {
                [
                    u[0][0].clone() * v[0].clone() + u[0][1].clone() * v[1].clone() + t[0].clone(),
                    u[1][0].clone() * v[0].clone() + u[1][1].clone() * v[1].clone() + t[1].clone(),
                ]
            })
            .collect();
        Self::normalize(&image)
    }

    /// Lattice points in the closed polygon, lexicographic.
    pub fn lattice_points(&self) -> Vec<LatticePoint<T>> {
        let xs = self.vertices.iter().map(|v| v[0].clone());
        let ys = self.vertices.iter().map(|v| v[1].clone());
        let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
        let mut out = Vec::new();
        let mut x = x0;
        while x <= x1 {
            let mut y = y0.clone();
            while y <= y1 {
                let p = [x.clone(), y.clone()];
                if self.contains(&p) {
                    out.push(p);
                }
                y = y + T::one();
            }
            x = x + T::one();
        }
        out
    }

    /// Lattice points strictly inside, lexicographic.
    pub fn interior_points(&self) -> Vec<LatticePoint<T>> {
        self.lattice_points()
            .into_iter()
            .filter(|p| {
                self.edges
                    .iter()
                    .all(|e| e.normal[0].clone() * p[0].clone() + e.normal[1].clone() * p[1].clone() > e.support)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn interior_point_is_absorbed() {
        let p = LatticePolygon::<i64>::normalize(&[[0, 0], [3, 0], [0, 3], [1, 1]]).unwrap();
        assert_eq!(p.vertices(), &[[0, 0], [3, 0], [0, 3]]);
    }

    #[test]
    fn unit_square_edges() {
        let p = LatticePolygon::<i64>::normalize(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        assert_eq!(p.vertices(), &[[0, 0], [1, 0], [1, 1], [0, 1]]);
        let normals: Vec<_> = p.edges().iter().map(|e| (e.normal, e.support)).collect();
        assert_eq!(normals, vec![([1, 0], 0), ([0, 1], 0), ([-1, 0], -1), ([0, -1], -1)]);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert_eq!(
            LatticePolygon::<i64>::normalize(&[[0, 0], [2, 0]]),
            Err(PolygonError::DegenerateInput("a segment"))
        );
        assert_eq!(
            LatticePolygon::<i64>::normalize(&[[0, 0], [1, 0], [2, 0], [3, 0]]),
            Err(PolygonError::DegenerateInput("a segment"))
        );
        assert_eq!(LatticePolygon::<i64>::normalize(&[[4, 4], [4, 4]]), Err(PolygonError::DegenerateInput("a point")));
        assert_eq!(LatticePolygon::<i64>::normalize(&[]), Err(PolygonError::EmptyInput));
    }

    #[test]
    fn normals_are_primitive_and_inward() {
        let p = LatticePolygon::<i64>::normalize(&[[0, 0], [4, 2], [0, 6], [-2, 2]]).unwrap();
        for e in p.edges() {
            assert_eq!(e.normal[0].gcd(&e.normal[1]), 1);
        }
        for v in p.vertices() {
            assert!(p.contains(v));
        }
        assert!(p.contains(&[0, 2]));
        assert!(!p.contains(&[4, 4]));
        assert!(p.double_area() > 0);
    }

    #[test]
    fn collinear_boundary_points_dropped() {
        let p = LatticePolygon::<i64>::normalize(&[[0, 0], [1, 0], [2, 0], [2, 1], [2, 2], [0, 2], [0, 1]]).unwrap();
        assert_eq!(p.vertices(), &[[0, 0], [2, 0], [2, 2], [0, 2]]);
        assert_eq!(p.lattice_points().len(), 9);
        assert_eq!(p.interior_points(), vec![[1, 1]]);
    }
}
