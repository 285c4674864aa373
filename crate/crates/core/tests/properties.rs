use adjoint_keel::adjoint::{adjoint_chain, adjoint_chain_with};
use adjoint_keel::linalg::bilinear;
use adjoint_keel::oracle::{fatpoint_dim_general, polygon_level_oracle};
use adjoint_keel::picard::{is_effective, is_nef, minimalize_with, DivisorClass, SurfaceModel, TieBreak};
use adjoint_keel::polygon::{keel_by_count, level_keel, offset_scale, LatticePolygon, RationalPolygon, Shape};
use num_rational::Ratio;
use proptest::prelude::*;

fn polygon_strategy(max: i64) -> impl Strategy<Value = LatticePolygon<i64>> {
    prop::collection::vec((0..=max, 0..=max), 3..8).prop_filter_map("degenerate hull", |pts| {
        let pts: Vec<[i64; 2]> = pts.into_iter().map(|(x, y)| [x, y]).collect();
        LatticePolygon::normalize(&pts).ok()
    })
}

/// Products of shears, swaps and sign flips.
fn unimodular_strategy() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::collection::vec((0..4u8, -3i64..=3), 0..5).prop_map(|ops| {
        let mut u = [[1i64, 0], [0, 1]];
        for (op, k) in ops {
            let e = match op {
                0 => [[1, k], [0, 1]],
                1 => [[1, 0], [k, 1]],
                2 => [[0, 1], [1, 0]],
                _ => [[-1, 0], [0, 1]],
            };
            u = [
                [e[0][0] * u[0][0] + e[0][1] * u[1][0], e[0][0] * u[0][1] + e[0][1] * u[1][1]],
                [e[1][0] * u[0][0] + e[1][1] * u[1][0], e[1][0] * u[0][1] + e[1][1] * u[1][1]],
            ];
        }
        u
    })
}

/// Nef and big `(d; m)` classes on plane blowups with `r ≤ 6`.
fn plane_class_strategy() -> impl Strategy<Value = DivisorClass<i64>> {
    (0usize..=6, 1i64..=9, prop::collection::vec(0i64..=4, 6)).prop_filter_map("not nef and big", |(r, d, m)| {
        let s = SurfaceModel::<i64>::plane_blowup(r).unwrap();
        let c = DivisorClass::from_degree_multiplicities(&s, d, &m[..r]).unwrap();
        (is_nef(&c) && c.square() > 0).then_some(c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn unimodular_images_keep_level_and_keel(
        p in polygon_strategy(12),
        u in unimodular_strategy(),
        t in (-20i64..=20, -20i64..=20),
    ) {
        let image = p.transformed(&u, &[t.0, t.1]).unwrap();
        let (a, b) = (level_keel(&p), level_keel(&image));
        prop_assert_eq!((a.level, a.keel), (b.level, b.keel));
    }

    #[test]
    fn scaling_multiplies_level_and_keel(p in polygon_strategy(10), s in 1i64..=4) {
        let a = level_keel(&p);
        let b = level_keel(&p.scaled(&s));
        prop_assert_eq!(b.level, a.level * s);
        prop_assert_eq!(b.keel, a.keel * s);
    }

    #[test]
    fn normalize_is_idempotent(p in polygon_strategy(12)) {
        prop_assert_eq!(LatticePolygon::normalize(p.vertices()).unwrap(), p.clone());
        let unit = offset_scale(&p, &1, &0);
        prop_assert!(unit.same_set(&RationalPolygon::from_lattice_polygon(&p)));
    }

    #[test]
    fn lp_level_matches_offset_search(p in polygon_strategy(12)) {
        let inv = level_keel(&p);
        prop_assume!(inv.denominator <= 24);
        prop_assert_eq!(polygon_level_oracle(&p, 24), inv.level);
    }

}

/// Polygons whose optimal face is likely a segment: thin rectangles moved by
/// a unimodular map, mixed with arbitrary small polygons.
fn segment_face_strategy() -> impl Strategy<Value = LatticePolygon<i64>> {
    let rectangles = (1i64..=6, 1i64..=6, unimodular_strategy(), (-9i64..=9, -9i64..=9)).prop_map(|(m, extra, u, t)| {
        let rect = LatticePolygon::normalize(&[[0, 0], [m, 0], [m, m + extra], [0, m + extra]]).unwrap();
        rect.transformed(&u, &[t.0, t.1]).unwrap()
    });
    prop_oneof![rectangles, polygon_strategy(12)]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn keel_count_stabilizes_on_multiples(p in segment_face_strategy(), k in 1i64..=5) {
        let inv = level_keel(&p);
        prop_assume!(inv.optimal_face.shape() == Shape::Segment);
        let (q, num) = (*inv.level.denom(), *inv.level.numer());
        // the count reads the keel once the scaled face has lattice endpoints
        prop_assume!(inv.optimal_face.vertices().iter().flatten().all(|c| (c * Ratio::from_integer(q * k)).is_integer()));
        prop_assert_eq!(keel_by_count(&p, &(q * k), &(num * k)), inv.keel);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn raising_a_multiplicity_never_raises_the_dimension(
        d in 0u32..=6,
        m in prop::collection::vec(1u32..=3, 0..4),
        bump in 0usize..4,
    ) {
        let mut raised = m.clone();
        match raised.get_mut(bump) {
            Some(x) => *x += 1,
            None => raised.push(1),
        }
        prop_assert!(fatpoint_dim_general(d, &raised, 11) <= fatpoint_dim_general(d, &m, 11));
    }

    #[test]
    fn nef_classes_meet_generators_nonnegatively(c in plane_class_strategy()) {
        let model = c.model();
        for g in model.effective_generators() {
            prop_assert!(bilinear(model.gram(), c.coeffs(), g) >= 0);
        }
        prop_assert_eq!(is_effective(&c), Ok(true));
    }

    #[test]
    fn minimal_model_does_not_depend_on_contraction_order(c in plane_class_strategy()) {
        let small = minimalize_with(&c, TieBreak::Smallest).unwrap();
        let large = minimalize_with(&c, TieBreak::Largest).unwrap();
        prop_assert_eq!(small.model.rank(), large.model.rank());
        prop_assert!(gram_equal_up_to_permutation(small.model.gram(), large.model.gram()));
        prop_assert_eq!(small.divisor.square(), large.divisor.square());
        let a = adjoint_chain_with(&c, TieBreak::Smallest).unwrap();
        let b = adjoint_chain_with(&c, TieBreak::Largest).unwrap();
        prop_assert_eq!((a.level, a.keel), (b.level, b.keel));
    }

    #[test]
    fn divisor_levels_scale(c in plane_class_strategy(), s in 2i64..=3) {
        let a = adjoint_chain(&c).unwrap();
        let b = adjoint_chain(&c.scaled(&s)).unwrap();
        prop_assert_eq!(b.level, a.level * s);
        prop_assert_eq!(b.keel, a.keel * s);
    }
}

fn gram_equal_up_to_permutation(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn search(a: &[Vec<i64>], b: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = perm.len();
        if i == a.len() {
            return true;
        }
        for j in 0..a.len() {
            if used[j] || (0..i).any(|k| a[i][k] != b[j][perm[k]]) || a[i][i] != b[j][j] {
                continue;
            }
            used[j] = true;
            perm.push(j);
            if search(a, b, perm, used) {
                return true;
            }
            perm.pop();
            used[j] = false;
        }
        false
    }
    a.len() == b.len() && search(a, b, &mut Vec::new(), &mut vec![false; a.len()])
}
