use serde::Serialize;

use super::bounds::PdegBounds;
use super::chain::{adjoint_chain, AdjointChainResult};
use super::endpoint::{classify_endpoint, parametrizing_is_sound};
use crate::picard::{is_effective, is_nef, DivisorClass};
use crate::scalar::{lift, Scalar};

/// Outcome of one invariant on one chain run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl InvariantCheck {
    /// `detail` is evaluated only on failure.
    pub fn new(name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) -> Self {
        Self { name: name.into(), passed, detail: if passed { String::new() } else { detail() } }
    }
}

fn check(name: &str, passed: bool, detail: impl FnOnce() -> String) -> InvariantCheck {
    InvariantCheck::new(name, passed, detail)
}

/// Runs the invariant suite on a finished chain for `input`.
pub fn check_chain<T: Scalar>(
    input: &DivisorClass<T>,
    chain: &AdjointChainResult<T>,
    bounds: Option<&PdegBounds<T>>,
) -> Vec<InvariantCheck> {
    let mut out = Vec::new();
    let divisors: Vec<&DivisorClass<T>> = chain.steps.iter().map(|s| &s.divisor).collect();

    let not_nef: Vec<String> = divisors.iter().filter(|d| !is_nef(d)).map(|d| d.to_string()).collect();
    out.push(check("chain_nef", not_nef.is_empty(), || format!("not nef: {}", not_nef.join(" "))));
    let not_effective: Vec<String> =
        divisors.iter().filter(|d| is_effective(d) != Ok(true)).map(|d| d.to_string()).collect();
    out.push(check("chain_effective", not_effective.is_empty(), || format!("not effective: {}", not_effective.join(" "))));
    let not_big: Vec<String> =
        divisors[..chain.a].iter().filter(|d| !d.square().is_positive()).map(|d| d.to_string()).collect();
    out.push(check("chain_big_before_end", not_big.is_empty(), || format!("D² ≤ 0: {}", not_big.join(" "))));

    let a = lift(T::of(chain.a as i64));
    out.push(check("a_at_most_level", a <= chain.level, || format!("a = {} > level", chain.a)));
    let six = T::of(6);
    out.push(check("level_denominator_divides_6", (six.clone() % chain.level.denom().clone()).is_zero(), || {
        format!("denominator {}", chain.level.denom())
    }));

    // restarting from (Sᵢ, Dᵢ) lowers the level by i and keeps the keel
    let mut restart = Vec::new();
    for (i, d) in divisors.iter().enumerate().skip(1) {
        if !d.square().is_positive() {
            continue;
        }
        match adjoint_chain(d) {
            Ok(c) if c.level == chain.level.clone() - lift(T::of(i as i64)) && c.keel == chain.keel => {}
            Ok(c) => restart.push(format!("step {i}: level {}, keel {}", c.level, c.keel)),
            Err(e) => restart.push(format!("step {i}: {e}")),
        }
    }
    out.push(check("restart_shifts_level", restart.is_empty(), || restart.join("; ")));

    for s in [2, 3] {
        let scaled = input.scaled(&T::of(s));
        let expected = (chain.level.clone() * lift(T::of(s)), chain.keel.clone() * lift(T::of(s)));
        let got = adjoint_chain(&scaled).map(|c| (c.level, c.keel));
        let name = if s == 2 { "scaling_by_2" } else { "scaling_by_3" };
        out.push(check(name, got.as_ref().ok() == Some(&expected), || format!("{got:?}")));
    }

    if let Some(b) = bounds {
        let mut ok = b.lower <= b.upper;
        if let Some(c) = &b.constructive_upper {
            let c = lift(c.clone());
            ok &= b.lower <= c && c <= b.upper;
        }
        out.push(check("sandwich", ok, || {
            format!("lower {} constructive {:?} upper {}", b.lower, b.constructive_upper, b.upper)
        }));
    }

    if chain.endpoint.is_integral() {
        let terminal = chain.terminal();
        match classify_endpoint(terminal.model(), chain.endpoint.fiber()) {
            Ok(endpoint) => {
                let q = &endpoint.parametrizing;
                let mut sound = parametrizing_is_sound(q);
                if chain.endpoint.fiber().is_none() {
                    sound &= -q.dot_canonical() <= T::of(6);
                }
                out.push(check("parametrizing_class", sound, || {
                    format!("Q = {q}, Q·K = {}", q.dot_canonical())
                }));
                let image = terminal.plus_canonical(&T::one(), &-T::of(chain.a as i64));
                let direct = q.intersect(&image).ok();
                let pulled = chain.pullback_to_input(q).ok().and_then(|p| p.intersect(input).ok());
                out.push(check("pullback_pairing", direct.is_some() && direct == pulled, || {
                    format!("Q·(D_a − aK_a) = {direct:?}, φ*(Q)·D = {pulled:?}")
                }));
            }
            Err(e) => out.push(check("parametrizing_class", false, || e.to_string())),
        }
    }
    out
}
