use num_rational::Ratio;
use num_traits::Zero;

use super::AdjointError;
use crate::picard::{is_effective, is_nef, minimalize_with, Contraction, DivisorClass, Surface, TieBreak};
use crate::scalar::{lift, Scalar};

/// One surface of the chain with its class and the blow-downs that led to it.
#[derive(Debug, Clone)]
pub struct ChainStep<T: Scalar> {
    pub divisor: DivisorClass<T>,
    pub contractions: Vec<Contraction<T>>,
}

impl<T: Scalar> ChainStep<T> {
    pub fn model(&self) -> &Surface<T> {
        self.divisor.model()
    }
}

/// How the terminal class `D_a` looks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndpointCase<T: Scalar> {
    /// `D_a = 0`.
    ZeroClass,
    /// `D_a = k·P` with `P² = 0`, `P·K = −2`.
    FiberMultiple { k: T, fiber: DivisorClass<T> },
    /// `3D_a + K_a = 0`.
    Third,
    /// `3D_a + 2K_a = 0`.
    TwoThirds,
    /// `2D_a + K_a = 0`.
    Half,
    /// `2D_a + K_a = k·P` with `P² = 0`, `P·K = −2`.
    HalfFiber { k: T, fiber: DivisorClass<T> },
}

impl<T: Scalar> EndpointCase<T> {
    pub fn tag(&self) -> &'static str {
        match self {
            EndpointCase::ZeroClass => "zero_class",
            EndpointCase::FiberMultiple { .. } => "fiber_multiple",
            EndpointCase::Third => "third",
            EndpointCase::TwoThirds => "two_thirds",
            EndpointCase::Half => "half",
            EndpointCase::HalfFiber { .. } => "half_fiber",
        }
    }

    pub fn fiber(&self) -> Option<&DivisorClass<T>> {
        match self {
            EndpointCase::FiberMultiple { fiber, .. } | EndpointCase::HalfFiber { fiber, .. } => Some(fiber),
            _ => None,
        }
    }

    /// Integral level: the chain end alone fixes the invariants.
    pub fn is_integral(&self) -> bool {
        matches!(self, EndpointCase::ZeroClass | EndpointCase::FiberMultiple { .. })
    }
}

#[derive(Debug, Clone)]
pub struct AdjointChainResult<T: Scalar> {
    /// `(S₀, D₀), …, (S_a, D_a)`.
    pub steps: Vec<ChainStep<T>>,
    pub a: usize,
    pub endpoint: EndpointCase<T>,
    pub level: Ratio<T>,
    pub keel: Ratio<T>,
}

impl<T: Scalar> AdjointChainResult<T> {
    pub fn terminal(&self) -> &DivisorClass<T> {
        &self.steps[self.a].divisor
    }

    /// Every blow-down from the input surface to `S_a`, in order.
    pub fn contractions(&self) -> impl Iterator<Item = &Contraction<T>> {
        self.steps.iter().flat_map(|s| s.contractions.iter())
    }

    /// `φ_a*`: carries a class on `S_a` back to the input surface.
    pub fn pullback_to_input(&self, class: &DivisorClass<T>) -> Result<DivisorClass<T>, AdjointError> {
        let all: Vec<&Contraction<T>> = self.contractions().collect();
        Ok(all.iter().rev().try_fold(class.clone(), |d, c| c.pullback(&d))?)
    }
}

/// `D = k·P` with `P` primitive, `P² = 0` and `P·K = −2` asserted.
fn fiber_decomposition<T: Scalar>(class: &DivisorClass<T>) -> Result<(T, DivisorClass<T>), AdjointError> {
    let k = class.content();
    let fiber = class.divided(&k).expect("content divides every coefficient");
    if !fiber.square().is_zero() || fiber.dot_canonical() != T::of(-2) {
        return Err(AdjointError::UnknownEndpoint(format!(
            "{class} = {k}·{fiber} with P² = {}, P·K = {}",
            fiber.square(),
            fiber.dot_canonical()
        )));
    }
    Ok((k, fiber))
}

fn classify_terminal<T: Scalar>(d: &DivisorClass<T>) -> Result<EndpointCase<T>, AdjointError> {
    if d.is_zero() {
        return Ok(EndpointCase::ZeroClass);
    }
    let square = d.square();
    if square.is_zero() {
        let (k, fiber) = fiber_decomposition(d)?;
        return Ok(EndpointCase::FiberMultiple { k, fiber });
    }
    if square.is_negative() {
        return Err(AdjointError::UnknownEndpoint(format!("terminal class {d} has negative square")));
    }
    if d.plus_canonical(&T::of(3), &T::one()).is_zero() {
        return Ok(EndpointCase::Third);
    }
    if d.plus_canonical(&T::of(3), &T::of(2)).is_zero() {
        return Ok(EndpointCase::TwoThirds);
    }
    let h = d.plus_canonical(&T::of(2), &T::one());
    if h.is_zero() {
        return Ok(EndpointCase::Half);
    }
    if h.square().is_zero() {
        let (k, fiber) = fiber_decomposition(&h)?;
        return Ok(EndpointCase::HalfFiber { k, fiber });
    }
    Err(AdjointError::UnknownEndpoint(format!("terminal class {d} with D² = {square} fits none of the cases")))
}

/// `⌊D·A / (−K·A)⌋` over nef witnesses `A` with `−K·A > 0`: an upper
/// bound for the level, since `qD + pK` effective forces `(qD + pK)·A ≥ 0`.
fn level_cap<T: Scalar>(d: &DivisorClass<T>) -> Option<usize> {
    let model = d.model();
    model
        .nef_witnesses()
        .iter()
        .filter_map(|a| {
            let minus_ka = -model.pair(model.canonical(), a);
            minus_ka.is_positive().then(|| Ratio::new(model.pair(d.coeffs(), a), minus_ka).floor().to_integer())
        })
        .min()
        .and_then(|b| b.to_usize())
}

pub fn adjoint_chain<T: Scalar>(divisor: &DivisorClass<T>) -> Result<AdjointChainResult<T>, AdjointError> {
    adjoint_chain_with(divisor, TieBreak::Smallest)
}

/// Runs the chain with a chosen minimalization tie-break.
pub fn adjoint_chain_with<T: Scalar>(
    divisor: &DivisorClass<T>,
    tie_break: TieBreak,
) -> Result<AdjointChainResult<T>, AdjointError> {
    if !is_nef(divisor) {
        return Err(AdjointError::NotNef(divisor.to_string()));
    }
    if !divisor.square().is_positive() {
        return Err(AdjointError::NotBig(divisor.to_string()));
    }
    if !is_effective(divisor)? {
        return Err(AdjointError::NotEffective(divisor.to_string()));
    }
    let cap = level_cap(divisor).unwrap_or(1024);
    let first = minimalize_with(divisor, tie_break)?;
    let mut steps = vec![ChainStep { divisor: first.divisor, contractions: first.contractions }];
    loop {
        let current = &steps.last().expect("chain is nonempty").divisor;
        let adjoint = current.plus_canonical(&T::one(), &T::one());
        if !is_effective(&adjoint)? {
            break;
        }
        if steps.len() > cap {
            return Err(AdjointError::NonTerminating { cap });
        }
        let next = minimalize_with(&adjoint, tie_break)?;
        steps.push(ChainStep { divisor: next.divisor, contractions: next.contractions });
    }
    let a = steps.len() - 1;
    let endpoint = classify_terminal(&steps[a].divisor)?;
    let base = lift(T::of(a as i64));
    let third = |i: i64| Ratio::new(T::of(i), T::of(3));
    let half = Ratio::new(T::one(), T::of(2));
    let (level, keel) = match &endpoint {
        EndpointCase::ZeroClass => (base, Ratio::zero()),
        EndpointCase::FiberMultiple { k, .. } => (base, lift(k.clone())),
        EndpointCase::Third => (base + third(1), Ratio::zero()),
        EndpointCase::TwoThirds => (base + third(2), Ratio::zero()),
        EndpointCase::Half => (base + half, Ratio::zero()),
        EndpointCase::HalfFiber { k, .. } => (base + half.clone(), lift(k.clone()) * half),
    };
    Ok(AdjointChainResult { steps, a, endpoint, level, keel })
}

/// `(level, keel)` of a nef and big class.
pub fn level_keel_divisor<T: Scalar>(divisor: &DivisorClass<T>) -> Result<(Ratio<T>, Ratio<T>), AdjointError> {
    let chain = adjoint_chain(divisor)?;
    Ok((chain.level, chain.keel))
}
