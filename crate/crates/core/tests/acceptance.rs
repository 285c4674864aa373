//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the report stays readable; exits nonzero on any failure.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use adjoint_keel::adjoint::{adjoint_chain, bounds_from_chain, example_high_report, EndpointCase};
use adjoint_keel::oracle::{effectivity_oracle, multiplicity_key, polygon_level_oracle, DEFAULT_SEED};
use adjoint_keel::picard::{is_effective, is_nef, neg_one_classes, DivisorClass, SurfaceModel};
use adjoint_keel::polygon::{level_keel, LatticePolygon};
use adjoint_keel::scalar::frac;
use adjoint_keel::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, Vec<String>>;

fn polygon(points: &[[i64; 2]]) -> LatticePolygon<i64> {
    LatticePolygon::normalize(points).unwrap()
}

fn triangle(n: i64) -> LatticePolygon<i64> {
    polygon(&[[0, 0], [n, 0], [0, n]])
}

fn rectangle(m: i64, n: i64) -> LatticePolygon<i64> {
    polygon(&[[0, 0], [m, 0], [m, n], [0, n]])
}

fn show(pair: &(Rational, Rational)) -> String {
    format!("({}, {})", pair.0, pair.1)
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures)
    }
}

fn within(limit: Duration, start: Instant, failures: &mut Vec<String>) {
    let spent = start.elapsed();
    if spent > limit {
        failures.push(format!("took {spent:.2?}, limit {limit:.0?}"));
    }
}

fn example_battery() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases: Vec<(String, LatticePolygon<i64>, (Rational, Rational))> = Vec::new();
    for n in 1..=30 {
        cases.push((format!("triangle {n}"), triangle(n), (frac(n, 3), frac(0, 1))));
    }
    for m in 1..=12 {
        for n in m..=12 {
            cases.push((format!("rectangle {m}x{n}"), rectangle(m, n), (frac(m, 2), frac(n - m, 1))));
        }
    }
    let figures = [
        ("triangle 9", triangle(9), (frac(3, 1), frac(0, 1))),
        ("rectangle 4x6", rectangle(4, 6), (frac(2, 1), frac(2, 1))),
        ("rectangle 5x6", rectangle(5, 6), (frac(5, 2), frac(1, 1))),
        ("triangle 7", triangle(7), (frac(7, 3), frac(0, 1))),
        ("triangle 8", triangle(8), (frac(8, 3), frac(0, 1))),
    ];
    for (name, p, expected) in &figures {
        let searched = polygon_level_oracle(p, 24);
        if searched != expected.0 {
            failures.push(format!("{name}: offset search gives {searched}"));
        }
    }
    cases.extend(figures.into_iter().map(|(n, p, e)| (format!("figure {n}"), p, e)));
    for (name, p, expected) in &cases {
        let inv = level_keel(p);
        let got = (inv.level, inv.keel);
        if &got != expected {
            failures.push(format!("{name}: got {}, want {}", show(&got), show(expected)));
        }
    }
    within(Duration::from_secs(10), start, &mut failures);
    outcome(failures, format!("{} polygons", cases.len()))
}

fn chain_battery() -> Outcome {
    let p2 = SurfaceModel::<i64>::plane_blowup(0).unwrap();
    let quadric = SurfaceModel::<i64>::quadric();
    let cubic = SurfaceModel::<i64>::plane_blowup(6).unwrap();
    let mut cases: Vec<(String, DivisorClass<i64>, (Rational, Rational))> = Vec::new();
    for n in 1..=12 {
        cases.push((format!("P2 {n}L"), DivisorClass::new(&p2, vec![n]).unwrap(), (frac(n, 3), frac(0, 1))));
    }
    for m in 1..=8 {
        for n in m..=10 {
            let d = DivisorClass::new(&quadric, vec![m, n]).unwrap();
            cases.push((format!("quadric ({m},{n})"), d, (frac(m, 2), frac(n - m, 1))));
        }
    }
    cases.push(("cubic surface -K".into(), DivisorClass::canonical(&cubic).scaled(&-1), (frac(1, 1), frac(0, 1))));
    let mut failures = Vec::new();
    for (name, d, expected) in &cases {
        match adjoint_chain(d) {
            Ok(c) if &(c.level, c.keel) == expected => {}
            Ok(c) => failures.push(format!("{name}: got {}", show(&(c.level, c.keel)))),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    match adjoint_chain(&DivisorClass::new(&quadric, vec![1, 1]).unwrap()) {
        Ok(c) if matches!(c.endpoint, EndpointCase::Half) && c.level == frac(1, 2) => {}
        other => failures.push(format!("quadric (1,1): {other:?}")),
    }
    match adjoint_chain(&DivisorClass::new(&quadric, vec![1, 2]).unwrap()) {
        Ok(c) if matches!(c.endpoint, EndpointCase::HalfFiber { .. }) && c.keel == frac(1, 1) => {}
        other => failures.push(format!("quadric (1,2): {other:?}")),
    }
    outcome(failures, format!("{} chains plus two fractional endpoints", cases.len()))
}

fn high_family() -> Outcome {
    let mut failures = Vec::new();
    for n in [5i64, 7, 9] {
        match example_high_report::<i64>(n) {
            Ok(r) => {
                let want = (frac(2 * n + 1, 2), frac(2 * n * n - 5 * n - 5, 4), frac(2 * n * n + 7 * n + 1, 4));
                let got = (r.level, r.keel, r.lower);
                if got != want {
                    failures.push(format!("n = {n}: got {got:?}, want {want:?}"));
                }
                let deg = frac(r.param_degree, 1);
                let upper = r.level * 6 + r.keel * 2;
                if r.param_degree != n * n + 1 || !(r.lower <= deg && deg <= upper) || !r.sandwich {
                    failures.push(format!("n = {n}: {} ≤ {} ≤ {upper} fails", r.lower, r.param_degree));
                }
            }
            Err(e) => failures.push(format!("n = {n}: {e}")),
        }
    }
    outcome(failures, "n = 5, 7, 9".into())
}

/// Nef, big and effective classes: a seeded sample on plane blowups plus
/// every small class on `F_0..F_3`.
fn sandwich_battery() -> Vec<DivisorClass<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut out = Vec::new();
    let keep = |c: &DivisorClass<i64>| is_nef(c) && c.square() > 0 && is_effective(c) == Ok(true);
    let mut plane = 0;
    while plane < 150 {
        let r = rng.gen_range(0..=6usize);
        let s = SurfaceModel::<i64>::plane_blowup(r).unwrap();
        let d = rng.gen_range(1..=9);
        let m: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=4)).collect();
        let c = DivisorClass::from_degree_multiplicities(&s, d, &m).unwrap();
        if keep(&c) {
            out.push(c);
            plane += 1;
        }
    }
    for n in 0..=3 {
        let s = SurfaceModel::<i64>::hirzebruch(n).unwrap();
        for a in 1..=5 {
            for b in 0..=12 {
                let c = DivisorClass::new(&s, vec![a, b]).unwrap();
                if keep(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn sandwich() -> Outcome {
    let classes = sandwich_battery();
    let mut failures = Vec::new();
    let mut defined = 0;
    for d in &classes {
        match adjoint_chain(d).and_then(|c| bounds_from_chain(&c)) {
            Ok(b) => {
                if let Some(cu) = b.constructive_upper {
                    defined += 1;
                    let cu = frac(cu, 1);
                    if !(b.lower <= cu && cu <= b.upper) {
                        failures.push(format!("{d}: {} ≤ {cu} ≤ {} fails", b.lower, b.upper));
                    }
                }
            }
            Err(e) => failures.push(format!("{d}: {e}")),
        }
    }
    if classes.len() < 100 {
        failures.push(format!("only {} classes generated", classes.len()));
    }
    outcome(failures, format!("{} classes, constructive upper bound defined on {defined}", classes.len()))
}

fn effectivity_grid() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cache: HashMap<(i64, Vec<u32>), bool> = HashMap::new();
    let mut total = 0;
    for r in 0..=5usize {
        let s = SurfaceModel::<i64>::plane_blowup(r).unwrap();
        for d in 0..=8 {
            let mut m = vec![0i64; r];
            loop {
                let class = DivisorClass::from_degree_multiplicities(&s, d, &m).unwrap();
                // the oracle only sees the multiset of positive multiplicities
                let oracle = *cache
                    .entry((d, multiplicity_key(&m)))
                    .or_insert_with(|| effectivity_oracle(&class, DEFAULT_SEED).unwrap());
                if is_effective(&class) != Ok(oracle) {
                    failures.push(format!("{class}: interpolation says {oracle}"));
                }
                total += 1;
                let Some(i) = m.iter().position(|&x| x < 4) else { break };
                m[i] += 1;
                m[..i].iter_mut().for_each(|x| *x = 0);
            }
        }
    }
    within(Duration::from_secs(60), start, &mut failures);
    outcome(failures, format!("{total} classes, {} interpolation problems", cache.len()))
}

/// Draws random polygons in `[0,12]²` until 200 have a level denominator
/// the offset search at `Q = 24` can reach.
fn random_polygon_levels() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut failures = Vec::new();
    let (mut compared, mut skipped) = (0, 0);
    while compared < 200 {
        let count = rng.gen_range(3..=7);
        let pts: Vec<[i64; 2]> = (0..count).map(|_| [rng.gen_range(0..=12), rng.gen_range(0..=12)]).collect();
        let Ok(p) = LatticePolygon::normalize(&pts) else { continue };
        let inv = level_keel(&p);
        if inv.denominator > 24 {
            skipped += 1;
            continue;
        }
        compared += 1;
        let searched = polygon_level_oracle(&p, 24);
        if searched != inv.level {
            failures.push(format!("{:?}: LP {}, search {searched}", p.vertices(), inv.level));
        }
    }
    outcome(failures, format!("200 polygons, {skipped} skipped with denominator above 24"))
}

fn exceptional_counts() -> Outcome {
    let start = Instant::now();
    let expected = [1, 3, 6, 10, 16, 27, 56, 240];
    let mut failures: Vec<String> = (1..=8)
        .filter_map(|r| {
            let s = SurfaceModel::<i64>::plane_blowup(r).unwrap();
            let count = neg_one_classes(&s).map(|c| c.len());
            (count != Ok(expected[r - 1])).then(|| format!("r = {r}: {count:?}"))
        })
        .collect();
    within(Duration::from_secs(5), start, &mut failures);
    outcome(failures, "r = 1..8".into())
}

fn cross_backend() -> Outcome {
    let dp6 = SurfaceModel::<i64>::plane_blowup(3).unwrap();
    let quadric = SurfaceModel::<i64>::quadric();
    let mut pairs = Vec::new();
    for k in 1..=5 {
        let hexagon = polygon(&[[0, 0], [k, 0], [2 * k, k], [2 * k, 2 * k], [k, 2 * k], [0, k]]);
        pairs.push((format!("hexagon {k}"), hexagon, DivisorClass::canonical(&dp6).scaled(&-k)));
    }
    for n in 1..=8 {
        pairs.push((format!("square {n}"), rectangle(n, n), DivisorClass::new(&quadric, vec![n, n]).unwrap()));
    }
    let mut failures = Vec::new();
    for (name, p, d) in &pairs {
        let inv = level_keel(p);
        let polygon_pair = (inv.level, inv.keel);
        match adjoint_chain(d) {
            Ok(c) if (c.level, c.keel) == polygon_pair => {}
            Ok(c) => failures.push(format!("{name}: polygon {}, chain {}", show(&polygon_pair), show(&(c.level, c.keel)))),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    outcome(failures, format!("{} pairs", pairs.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 polygon example battery", example_battery),
        ("2 chain battery", chain_battery),
        ("3 high-degree family", high_family),
        ("4 sandwich on nef effective classes", sandwich),
        ("5a effectivity agrees with interpolation", effectivity_grid),
        ("5b LP level agrees with offset search", random_polygon_levels),
        ("6 (-1)-class counts", exceptional_counts),
        ("7 polygon and lattice backends agree", cross_backend),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let result = run();
        let spent = start.elapsed();
        match result {
            Ok(summary) => println!("PASS {name}: {summary} [{spent:.2?}]"),
            Err(failures) => {
                all = false;
                println!("FAIL {name} [{spent:.2?}]");
                for f in failures.iter().take(20) {
                    println!("    {f}");
                }
                if failures.len() > 20 {
                    println!("    ... {} more", failures.len() - 20);
                }
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
