//! Oracle comparisons for single inputs and the built-in example suite run
//! by `adjoint-keel check`.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::adjoint::{adjoint_chain, bounds_from_chain, check_chain, example_high_report, AdjointChainResult, InvariantCheck};
use crate::oracle::{class_dim, divisor_level_oracle, effectivity_oracle, multiplicity_key, polygon_level_oracle};
use crate::picard::{is_effective, neg_one_classes, DivisorClass, SurfaceModel};
use crate::polygon::{level_keel, polygon_adjoint_chain, LatticePolygon};
use crate::scalar::frac;

type Q = Ratio<i64>;

/// Denominator cap of the polygon level search.
pub const POLYGON_ORACLE_Q: u32 = 24;
/// Denominator cap of the divisor level search; every level has
/// denominator dividing 6.
pub const DIVISOR_ORACLE_Q: u32 = 12;

fn pair(level: &Q, keel: &Q) -> String {
    format!("({level}, {keel})")
}

/// Brute-force comparisons for a polygon.
pub fn polygon_oracle_checks(polygon: &LatticePolygon<i64>) -> Vec<InvariantCheck> {
    let inv = level_keel(polygon);
    let mut out = Vec::new();
    if inv.denominator <= i64::from(POLYGON_ORACLE_Q) {
        let searched = polygon_level_oracle(polygon, POLYGON_ORACLE_Q);
        out.push(InvariantCheck::new("level_matches_offset_search", searched == inv.level, || {
            format!("search gives {searched}, LP gives {}", inv.level)
        }));
    }
    let chain = polygon_adjoint_chain(polygon).level_keel();
    out.push(InvariantCheck::new("interior_hull_chain_agrees", chain == Some((inv.level, inv.keel)), || {
        format!("chain gives {chain:?}, LP gives {}", pair(&inv.level, &inv.keel))
    }));
    out
}

/// Brute-force comparisons for a surface class and its chain.
pub fn surface_oracle_checks(divisor: &DivisorClass<i64>, chain: &AdjointChainResult<i64>, seed: u64) -> Vec<InvariantCheck> {
    let mut out = Vec::new();
    match divisor_level_oracle(divisor, DIVISOR_ORACLE_Q, is_effective) {
        Ok(searched) => out.push(InvariantCheck::new("level_matches_effectivity_search", searched == chain.level, || {
            format!("search gives {searched}, chain gives {}", chain.level)
        })),
        Err(e) => out.push(InvariantCheck::new("level_matches_effectivity_search", false, || e.to_string())),
    }
    let small_plane = matches!(divisor.degree_multiplicities(), Some((d, ref m)) if m.len() <= 5 && (0..=2).contains(&d));
    if small_plane {
        let searched = divisor_level_oracle(divisor, 6, |c| effectivity_oracle(c, seed));
        out.push(InvariantCheck::new("level_matches_interpolation_search", searched.as_ref() == Ok(&chain.level), || {
            format!("interpolation search gives {searched:?}, chain gives {}", chain.level)
        }));
    }
    let disagreements: Vec<String> = chain
        .steps
        .iter()
        .map(|s| &s.divisor)
        .filter(|d| matches!(d.degree_multiplicities(), Some((deg, ref m)) if m.len() <= 5 && deg <= 10))
        .filter(|d| effectivity_oracle(d, seed).ok() != is_effective(d).ok())
        .map(|d| d.to_string())
        .collect();
    out.push(InvariantCheck::new("chain_effectivity_matches_interpolation", disagreements.is_empty(), || {
        format!("disagree on {}", disagreements.join(" "))
    }));
    out
}

fn polygon(points: &[[i64; 2]]) -> LatticePolygon<i64> {
    LatticePolygon::normalize(points).expect("built-in polygons are 2-dimensional")
}

fn triangle(n: i64) -> LatticePolygon<i64> {
    polygon(&[[0, 0], [n, 0], [0, n]])
}

fn rectangle(m: i64, n: i64) -> LatticePolygon<i64> {
    polygon(&[[0, 0], [m, 0], [m, n], [0, n]])
}

fn hexagon(k: i64) -> LatticePolygon<i64> {
    polygon(&[[0, 0], [k, 0], [2 * k, k], [2 * k, 2 * k], [k, 2 * k], [0, k]])
}

fn collect(name: &str, failures: Vec<String>) -> InvariantCheck {
    InvariantCheck::new(name, failures.is_empty(), || failures.join("; "))
}

fn polygon_battery() -> Vec<InvariantCheck> {
    let mut failures = Vec::new();
    for n in 1..=30 {
        let inv = level_keel(&triangle(n));
        if (inv.level, inv.keel) != (frac(n, 3), frac(0, 1)) {
            failures.push(format!("triangle {n}: {}", pair(&inv.level, &inv.keel)));
        }
    }
    let triangles = collect("triangles_level_n_over_3", failures);
    let mut failures = Vec::new();
    for m in 1..=12 {
        for n in m..=12 {
            let inv = level_keel(&rectangle(m, n));
            if (inv.level, inv.keel) != (frac(m, 2), frac(n - m, 1)) {
                failures.push(format!("rectangle {m}x{n}: {}", pair(&inv.level, &inv.keel)));
            }
        }
    }
    let rectangles = collect("rectangles_level_m_over_2", failures);
    let figures = [
        (triangle(9), frac(3, 1), frac(0, 1)),
        (rectangle(4, 6), frac(2, 1), frac(2, 1)),
        (rectangle(5, 6), frac(5, 2), frac(1, 1)),
        (triangle(7), frac(7, 3), frac(0, 1)),
        (triangle(8), frac(8, 3), frac(0, 1)),
    ];
    let mut failures = Vec::new();
    for (p, level, keel) in &figures {
        let inv = level_keel(p);
        let searched = polygon_level_oracle(p, POLYGON_ORACLE_Q);
        if (&inv.level, &inv.keel) != (level, keel) || &searched != level {
            failures.push(format!("{:?}: LP {}, search {searched}", p.vertices(), pair(&inv.level, &inv.keel)));
        }
    }
    vec![triangles, rectangles, collect("constructed_figures_match_search", failures)]
}

fn chain_battery(seed: u64) -> Vec<InvariantCheck> {
    let p2 = SurfaceModel::<i64>::plane_blowup(0).expect("valid");
    let quadric = SurfaceModel::<i64>::quadric();
    let mut cases: Vec<(String, DivisorClass<i64>, Q, Q)> = Vec::new();
    for n in 1..=12 {
        cases.push((format!("P2 {n}L"), DivisorClass::new(&p2, vec![n]).expect("rank 1"), frac(n, 3), frac(0, 1)));
    }
    for m in 1..=6 {
        for n in m..=8 {
            let d = DivisorClass::new(&quadric, vec![m, n]).expect("rank 2");
            cases.push((format!("quadric ({m},{n})"), d, frac(m, 2), frac(n - m, 1)));
        }
    }
    let cubic = SurfaceModel::<i64>::plane_blowup(6).expect("valid");
    cases.push(("cubic surface -K".into(), DivisorClass::canonical(&cubic).scaled(&-1), frac(1, 1), frac(0, 1)));
    let mut level_failures = Vec::new();
    let mut invariant_failures = Vec::new();
    for (name, d, level, keel) in &cases {
        match adjoint_chain(d) {
            Ok(chain) => {
                if (&chain.level, &chain.keel) != (level, keel) {
                    level_failures.push(format!("{name}: {}", pair(&chain.level, &chain.keel)));
                }
                let bounds = bounds_from_chain(&chain).ok();
                let checks = check_chain(d, &chain, bounds.as_ref())
                    .into_iter()
                    .chain(surface_oracle_checks(d, &chain, seed));
                for c in checks.filter(|c| !c.passed) {
                    invariant_failures.push(format!("{name}: {} ({})", c.name, c.detail));
                }
            }
            Err(e) => level_failures.push(format!("{name}: {e}")),
        }
    }
    let tags = [
        (DivisorClass::new(&quadric, vec![1, 1]).expect("rank 2"), "half"),
        (DivisorClass::new(&quadric, vec![1, 2]).expect("rank 2"), "half_fiber"),
        (DivisorClass::new(&p2, vec![4]).expect("rank 1"), "third"),
        (DivisorClass::new(&p2, vec![5]).expect("rank 1"), "two_thirds"),
    ];
    let mut tag_failures = Vec::new();
    for (d, tag) in &tags {
        match adjoint_chain(d) {
            Ok(chain) if chain.endpoint.tag() == *tag => {}
            Ok(chain) => tag_failures.push(format!("{d}: {}", chain.endpoint.tag())),
            Err(e) => tag_failures.push(format!("{d}: {e}")),
        }
    }
    vec![
        collect("chain_levels_and_keels", level_failures),
        collect("chain_invariants_and_oracles", invariant_failures),
        collect("fractional_endpoint_cases", tag_failures),
    ]
}

fn high_family() -> InvariantCheck {
    let mut failures = Vec::new();
    for n in [5i64, 7, 9] {
        match example_high_report::<i64>(n) {
            Ok(r) => {
                let expected = (frac(2 * n + 1, 2), frac(2 * n * n - 5 * n - 5, 4), frac(2 * n * n + 7 * n + 1, 4));
                let consistent = r.sandwich
                    && r.hyperplane_square == 2 * n + 1
                    && r.keel_from_system == r.keel
                    && (r.level, r.keel, r.lower) == expected;
                if !consistent {
                    failures.push(format!("n = {n}"));
                }
            }
            Err(e) => failures.push(e.to_string()),
        }
    }
    collect("high_degree_family", failures)
}

fn exceptional_counts() -> InvariantCheck {
    let expected = [1, 3, 6, 10, 16, 27, 56, 240];
    let failures = (1..=8)
        .filter_map(|r| {
            let s = SurfaceModel::<i64>::plane_blowup(r).expect("r ≤ 8");
            let count = neg_one_classes(&s).map_or(0, |c| c.len());
            (count != expected[r - 1]).then(|| format!("r = {r}: {count}"))
        })
        .collect();
    collect("exceptional_class_counts", failures)
}

fn cross_backend() -> InvariantCheck {
    let dp6 = SurfaceModel::<i64>::plane_blowup(3).expect("valid");
    let quadric = SurfaceModel::<i64>::quadric();
    let p2 = SurfaceModel::<i64>::plane_blowup(0).expect("valid");
    let mut pairs: Vec<(LatticePolygon<i64>, DivisorClass<i64>)> = Vec::new();
    for k in 1..=4 {
        pairs.push((hexagon(k), DivisorClass::canonical(&dp6).scaled(&-k)));
    }
    for m in 1..=5 {
        for n in m..=6 {
            pairs.push((rectangle(m, n), DivisorClass::new(&quadric, vec![m, n]).expect("rank 2")));
        }
    }
    for n in 1..=9 {
        pairs.push((triangle(n), DivisorClass::new(&p2, vec![n]).expect("rank 1")));
    }
    let failures = pairs
        .iter()
        .filter_map(|(p, d)| {
            let inv = level_keel(p);
            let chain = adjoint_chain(d).map(|c| (c.level, c.keel));
            (chain.as_ref().ok() != Some(&(inv.level, inv.keel)))
                .then(|| format!("{d}: polygon {}, chain {chain:?}", pair(&inv.level, &inv.keel)))
        })
        .collect();
    collect("polygon_and_lattice_backends_agree", failures)
}

/// `is_effective` against interpolation on `(d; m)`, `d ≤ 5`, `mᵢ ≤ 2`,
/// `r ≤ 4`; the full sweep lives in the acceptance tests.
fn effectivity_sample(seed: u64) -> InvariantCheck {
    let mut cache: HashMap<(i64, Vec<u32>), bool> = HashMap::new();
    let mut failures = Vec::new();
    for r in 0..=4usize {
        let s = SurfaceModel::<i64>::plane_blowup(r).expect("r ≤ 8");
        for d in 0..=5 {
            let mut m = vec![0i64; r];
            loop {
                let oracle = *cache.entry((d, multiplicity_key(&m))).or_insert_with(|| class_dim(d, &m, seed) >= 0);
                let class = DivisorClass::from_degree_multiplicities(&s, d, &m).expect("length r");
                if is_effective(&class).ok() != Some(oracle) {
                    failures.push(format!("{class}: interpolation says {oracle}"));
                }
                let Some(i) = m.iter().position(|&x| x < 2) else { break };
                m[i] += 1;
                m[..i].iter_mut().for_each(|x| *x = 0);
            }
        }
    }
    collect("effectivity_matches_interpolation", failures)
}

/// Every built-in example and invariant suite.
pub fn builtin_checks(seed: u64) -> Vec<InvariantCheck> {
    let mut out = polygon_battery();
    out.extend(chain_battery(seed));
    out.push(high_family());
    out.push(exceptional_counts());
    out.push(cross_backend());
    out.push(effectivity_sample(seed));
    out
}
