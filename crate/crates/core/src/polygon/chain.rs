use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use super::hull::{cross, LatticePolygon};
use super::invariants::interior_hull;
use super::rational::{RationalPolygon, Shape};
use crate::scalar::Scalar;

/// How the interior-hull iteration ended.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PolygonEndpoint<T> {
    /// A single lattice point: `Dₐ = 0`.
    Point,
    /// A lattice segment with `steps + 1` lattice points: `Dₐ = steps·P`.
    Segment { steps: T },
    /// No interior points; `3Γ` has exactly one.
    Third,
    /// No interior points; the interior hull of `3Γ` has exactly one.
    TwoThirds,
    /// No interior points; `2Γ` has exactly one.
    Half,
    /// No interior points; the interior points of `2Γ` are collinear.
    HalfSegment { steps: T },
    Unclassified,
}

/// `Γ, hull(int Γ), hull(int hull(int Γ)), …` with the terminal tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonChain<T: Scalar> {
    pub members: Vec<RationalPolygon<T>>,
    pub endpoint: PolygonEndpoint<T>,
}

impl<T: Scalar> PolygonChain<T> {
    /// Number of interior-hull passes.
    pub fn steps(&self) -> usize {
        self.members.len() - 1
    }

    /// Level and keel read from the terminal member.
    pub fn level_keel(&self) -> Option<(Ratio<T>, Ratio<T>)> {
        let a = Ratio::from_integer(T::of(self.steps() as i64));
        let half = Ratio::new(T::one(), T::of(2));
        Some(match &self.endpoint {
            PolygonEndpoint::Point => (a, Ratio::zero()),
            PolygonEndpoint::Segment { steps } => (a, Ratio::from_integer(steps.clone())),
            PolygonEndpoint::Third => (a + Ratio::new(T::one(), T::of(3)), Ratio::zero()),
            PolygonEndpoint::TwoThirds => (a + Ratio::new(T::of(2), T::of(3)), Ratio::zero()),
            PolygonEndpoint::Half => (a + half, Ratio::zero()),
            PolygonEndpoint::HalfSegment { steps } => (a + half.clone(), Ratio::from_integer(steps.clone()) * half),
            PolygonEndpoint::Unclassified => return None,
        })
    }
}

fn lattice_polygon_of<T: Scalar>(figure: &RationalPolygon<T>) -> LatticePolygon<T> {
    let vertices = figure.lattice_vertices().expect("interior hulls have lattice vertices");
    LatticePolygon::from_hull(vertices)
}

fn has_single_interior_point<T: Scalar>(polygon: &LatticePolygon<T>) -> bool {
    polygon.interior_points().len() == 1
}

/// Subcase of a lattice polygon without interior lattice points.
fn classify_hollow<T: Scalar>(polygon: &LatticePolygon<T>) -> PolygonEndpoint<T> {
    let tripled = polygon.scaled(&T::of(3));
    if has_single_interior_point(&tripled) {
        return PolygonEndpoint::Third;
    }
    let hull = interior_hull(&tripled);
    if hull.shape() == Shape::TwoDimensional && has_single_interior_point(&lattice_polygon_of(&hull)) {
        return PolygonEndpoint::TwoThirds;
    }
    let doubled = polygon.scaled(&T::of(2)).interior_points();
    match doubled.len() {
        0 => PolygonEndpoint::Unclassified,
        1 => PolygonEndpoint::Half,
        n => {
            let (first, last) = (&doubled[0], &doubled[n - 1]);
            if doubled.iter().all(|p| cross(first, last, p).is_zero()) {
                PolygonEndpoint::HalfSegment { steps: T::of(n as i64 - 1) }
            } else {
                PolygonEndpoint::Unclassified
            }
        }
    }
}

/// Iterates the interior hull until a point, a segment, or a polygon without
/// interior lattice points is reached.
pub fn polygon_adjoint_chain<T: Scalar>(polygon: &LatticePolygon<T>) -> PolygonChain<T> {
    let mut members = vec![RationalPolygon::from_lattice_polygon(polygon)];
    let mut current = polygon.clone();
    loop {
        let next = interior_hull(&current);
        match next.shape() {
            Shape::Empty => {
                let endpoint = classify_hollow(&current);
                return PolygonChain { members, endpoint };
            }
            Shape::Point => {
                members.push(next);
                return PolygonChain { members, endpoint: PolygonEndpoint::Point };
            }
            Shape::Segment => {
                let v = next.lattice_vertices().expect("lattice hull");
                let steps = num_integer::Integer::gcd(&(v[1][0].clone() - v[0][0].clone()), &(v[1][1].clone() - v[0][1].clone()));
                members.push(next);
                return PolygonChain { members, endpoint: PolygonEndpoint::Segment { steps } };
            }
            Shape::TwoDimensional => {
                current = lattice_polygon_of(&next);
                members.push(next);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn poly(points: &[[i64; 2]]) -> LatticePolygon<i64> {
        LatticePolygon::normalize(points).unwrap()
    }

    #[test]
    fn square_four_chain() {
        let chain = polygon_adjoint_chain(&poly(&[[0, 0], [4, 0], [4, 4], [0, 4]]));
        assert_eq!(chain.members.len(), 3);
        assert_eq!(chain.members[1].lattice_vertices().unwrap(), vec![[1, 1], [3, 1], [3, 3], [1, 3]]);
        assert_eq!(chain.members[2].lattice_vertices().unwrap(), vec![[2, 2]]);
        assert_eq!(chain.endpoint, PolygonEndpoint::Point);
        assert_eq!(chain.level_keel(), Some((frac(2, 1), frac(0, 1))));
    }

    #[test]
    fn triangle_and_hexagon_reach_a_point() {
        let chain = polygon_adjoint_chain(&poly(&[[0, 0], [3, 0], [0, 3]]));
        assert_eq!(chain.members.len(), 2);
        assert_eq!(chain.members[1].lattice_vertices().unwrap(), vec![[1, 1]]);
        let hexagon = poly(&[[0, 0], [1, 0], [0, 1], [2, 1], [1, 2], [2, 2]]);
        assert_eq!(hexagon.vertices().len(), 6);
        let chain = polygon_adjoint_chain(&hexagon);
        assert_eq!(chain.members.len(), 2);
        assert_eq!(chain.members[1].lattice_vertices().unwrap(), vec![[1, 1]]);
    }

    #[test]
    fn hollow_subcases() {
        let unit_triangle = polygon_adjoint_chain(&poly(&[[0, 0], [1, 0], [0, 1]]));
        assert_eq!(unit_triangle.endpoint, PolygonEndpoint::Third);
        assert_eq!(unit_triangle.members.len(), 1);
        let double_triangle = polygon_adjoint_chain(&poly(&[[0, 0], [2, 0], [0, 2]]));
        assert_eq!(double_triangle.endpoint, PolygonEndpoint::TwoThirds);
        let square = polygon_adjoint_chain(&poly(&[[0, 0], [1, 0], [1, 1], [0, 1]]));
        assert_eq!(square.endpoint, PolygonEndpoint::Half);
        let strip = polygon_adjoint_chain(&poly(&[[0, 0], [2, 0], [2, 1], [0, 1]]));
        assert_eq!(strip.endpoint, PolygonEndpoint::HalfSegment { steps: 2 });
        assert_eq!(strip.level_keel(), Some((frac(1, 2), frac(1, 1))));
    }

    #[test]
    fn segment_endpoint() {
        let chain = polygon_adjoint_chain(&poly(&[[0, 0], [5, 0], [5, 3], [0, 3]]));
        // [0,5]x[0,3] -> [1,4]x[1,2] -> hollow strip of width 1
        assert_eq!(chain.members.len(), 2);
        assert_eq!(chain.endpoint, PolygonEndpoint::HalfSegment { steps: 4 });
        assert_eq!(chain.level_keel(), Some((frac(3, 2), frac(2, 1))));
        let chain = polygon_adjoint_chain(&poly(&[[0, 0], [6, 0], [6, 4], [0, 4]]));
        assert_eq!(chain.endpoint, PolygonEndpoint::Segment { steps: 2 });
        assert_eq!(chain.level_keel(), Some((frac(2, 1), frac(2, 1))));
    }
}
