use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use super::exceptional::neg_one_vectors;
use super::PicardError;
use crate::linalg::{bilinear, inertia, IntMatrix};
use crate::scalar::{content, Scalar};

/// Which lattice a model describes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "model")]
pub enum ModelKind {
    /// `P²` blown up in `r` general points, basis `(L, E₁, …, E_r)`.
    PlaneBlowup { r: usize },
    /// Ruled surface `F_n`, basis `(C, f)` with `C² = −n`.
    Hirzebruch { n: i64 },
    /// `P¹ × P¹`, basis `(F₁, F₂)`.
    Quadric,
    /// Quadric blown up in a point of degree 2, basis `(P, E)`.
    QuadricDeg2Blowup,
    /// `P²` blown up in a point of degree 4, basis `(L, E)`.
    PlaneDeg4Blowup,
    /// Lattice data given directly.
    Custom,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::PlaneBlowup { r } => write!(f, "plane_blowup({r})"),
            ModelKind::Hirzebruch { n } => write!(f, "hirzebruch({n})"),
            ModelKind::Quadric => f.write_str("quadric"),
            ModelKind::QuadricDeg2Blowup => f.write_str("quadric_deg2_blowup"),
            ModelKind::PlaneDeg4Blowup => f.write_str("plane_deg4_blowup"),
            ModelKind::Custom => f.write_str("custom"),
        }
    }
}

/// Picard lattice of a smooth rational surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceModel<T: Scalar> {
    kind: ModelKind,
    gram: IntMatrix<T>,
    canonical: Vec<T>,
    effective_generators: Vec<Vec<T>>,
    contractibles: Vec<Vec<T>>,
    /// Nef classes used to refute effectivity: `D` effective ⇒ `D·A ≥ 0`.
    nef_witnesses: Vec<Vec<T>>,
}

/// Shared handle to a model; classes keep one.
pub type Surface<T> = Arc<SurfaceModel<T>>;

fn ints<T: Scalar>(values: &[i64]) -> Vec<T> {
    values.iter().map(|&v| T::of(v)).collect()
}

fn int_matrix<T: Scalar>(rows: &[&[i64]]) -> IntMatrix<T> {
    rows.iter().map(|r| ints(r)).collect()
}

impl<T: Scalar> SurfaceModel<T> {
    pub(crate) fn from_parts(
        kind: ModelKind,
        gram: IntMatrix<T>,
        canonical: Vec<T>,
        effective_generators: Vec<Vec<T>>,
        contractibles: Vec<Vec<T>>,
        nef_witnesses: Vec<Vec<T>>,
    ) -> Result<Surface<T>, PicardError> {
        let model = Self { kind, gram, canonical, effective_generators, contractibles, nef_witnesses };
        model.validate()?;
        Ok(Arc::new(model))
    }

    /// `P²` blown up in `r ≤ 8` points in general position.
    pub fn plane_blowup(r: usize) -> Result<Surface<T>, PicardError> {
        if r > 8 {
            return Err(PicardError::UnsupportedRank(r));
        }
        let n = r + 1;
        let gram = (0..n)
            .map(|i| (0..n).map(|j| if i != j { T::zero() } else if i == 0 { T::one() } else { -T::one() }).collect())
            .collect();
        let mut canonical = vec![T::one(); n];
        canonical[0] = T::of(-3);
        let line: Vec<T> = (0..n).map(|i| if i == 0 { T::one() } else { T::zero() }).collect();
        let anticanonical: Vec<T> = canonical.iter().map(|c| -c.clone()).collect();
        let exceptional = neg_one_vectors::<T>(r);
        let mut witnesses = vec![line.clone(), anticanonical];
        let generators = match r {
            0 => vec![line],
            1 => {
                let fiber = ints(&[1, -1]);
                witnesses.push(fiber.clone());
                vec![ints(&[0, 1]), fiber]
            }
            _ => exceptional.clone(),
        };
        Self::from_parts(ModelKind::PlaneBlowup { r }, gram, canonical, generators, exceptional, witnesses)
    }

    /// Hirzebruch surface `F_n`, `n ≥ 0`.
    pub fn hirzebruch(n: i64) -> Result<Surface<T>, PicardError> {
        if n < 0 {
            return Err(PicardError::InvalidModel(format!("hirzebruch index {n} is negative")));
        }
        let gram = int_matrix(&[&[-n, 1], &[1, 0]]);
        let canonical = ints(&[-2, -n - 2]);
        let contractibles = if n == 1 { vec![ints(&[1, 0])] } else { vec![] };
        let generators = vec![ints(&[1, 0]), ints(&[0, 1])];
        let witnesses = vec![ints(&[0, 1]), ints(&[1, n])];
        Self::from_parts(ModelKind::Hirzebruch { n }, gram, canonical, generators, contractibles, witnesses)
    }

    pub fn quadric() -> Surface<T> {
        let generators = vec![ints(&[1, 0]), ints(&[0, 1])];
        Self::from_parts(
            ModelKind::Quadric,
            int_matrix(&[&[0, 1], &[1, 0]]),
            ints(&[-2, -2]),
            generators.clone(),
            vec![],
            generators,
        )
        .expect("built-in quadric lattice is valid")
    }

    /// Basis `(P, E)`: `P² = 0`, `P·E = 2`, `E² = −2`, `K = −2P − E`.
    pub fn quadric_deg2_blowup() -> Surface<T> {
        Self::from_parts(
            ModelKind::QuadricDeg2Blowup,
            int_matrix(&[&[0, 2], &[2, -2]]),
            ints(&[-2, -1]),
            vec![ints(&[1, 0]), ints(&[0, 1])],
            vec![ints(&[0, 1])],
            vec![ints(&[1, 0]), ints(&[1, 1])],
        )
        .expect("built-in lattice is valid")
    }

    /// Basis `(L, E)`: `L² = 1`, `E² = −4`, `K = −3L + E`; fibers `2L − E`.
    pub fn plane_deg4_blowup() -> Surface<T> {
        Self::from_parts(
            ModelKind::PlaneDeg4Blowup,
            int_matrix(&[&[1, 0], &[0, -4]]),
            ints(&[-3, 1]),
            vec![ints(&[0, 1]), ints(&[2, -1])],
            vec![ints(&[0, 1])],
            vec![ints(&[1, 0]), ints(&[2, -1])],
        )
        .expect("built-in lattice is valid")
    }

    /// Model from raw lattice data. Nef witnesses are the generators that
    /// pair nonnegatively with every generator, plus `−K` when it does.
    pub fn custom(
        gram: IntMatrix<T>,
        canonical: Vec<T>,
        effective_generators: Vec<Vec<T>>,
        contractibles: Vec<Vec<T>>,
    ) -> Result<Surface<T>, PicardError> {
        let n = gram.len();
        for v in std::iter::once(&canonical).chain(&effective_generators).chain(&contractibles) {
            if v.len() != n {
                return Err(PicardError::WrongLength { expected: n, got: v.len() });
            }
        }
        if gram.iter().any(|row| row.len() != n) {
            return Err(PicardError::InvalidModel("gram matrix is not square".into()));
        }
        let pairs_nonnegatively =
            |a: &Vec<T>| effective_generators.iter().all(|g| !bilinear(&gram, a, g).is_negative());
        let mut witnesses: Vec<Vec<T>> = effective_generators.iter().filter(|g| pairs_nonnegatively(g)).cloned().collect();
        let anticanonical: Vec<T> = canonical.iter().map(|c| -c.clone()).collect();
        if pairs_nonnegatively(&anticanonical) {
            witnesses.push(anticanonical);
        }
        Self::from_parts(ModelKind::Custom, gram, canonical, effective_generators, contractibles, witnesses)
    }

    fn validate(&self) -> Result<(), PicardError> {
        let n = self.gram.len();
        let bad = |msg: String| Err(PicardError::InvalidModel(msg));
        if n == 0 {
            return bad("rank is zero".into());
        }
        for i in 0..n {
            for j in 0..n {
                if self.gram[i][j] != self.gram[j][i] {
                    return bad(format!("gram matrix is not symmetric at ({i}, {j})"));
                }
            }
        }
        let (pos, neg, zero) = inertia(&self.gram);
        if (pos, neg, zero) != (1, n - 1, 0) {
            return bad(format!("intersection form has signature ({pos}, {neg}) with {zero} null directions"));
        }
        let expected = match self.kind {
            ModelKind::PlaneBlowup { r } => Some(9 - r as i64),
            ModelKind::Hirzebruch { .. } | ModelKind::Quadric => Some(8),
            ModelKind::QuadricDeg2Blowup => Some(6),
            ModelKind::PlaneDeg4Blowup => Some(5),
            ModelKind::Custom => None,
        };
        let k2 = bilinear(&self.gram, &self.canonical, &self.canonical);
        if let Some(e) = expected {
            if k2 != T::of(e) {
                return bad(format!("K² = {k2}, expected {e} for {}", self.kind));
            }
        }
        for e in &self.contractibles {
            let e2 = bilinear(&self.gram, e, e);
            let ek = bilinear(&self.gram, e, &self.canonical);
            if e2 != ek || !e2.is_negative() {
                return bad(format!("contractible {e:?} has E² = {e2}, E·K = {ek}"));
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &IntMatrix<T> {
        &self.gram
    }

    pub fn canonical(&self) -> &[T] {
        &self.canonical
    }

    pub fn effective_generators(&self) -> &[Vec<T>] {
        &self.effective_generators
    }

    pub fn contractibles(&self) -> &[Vec<T>] {
        &self.contractibles
    }

    pub fn nef_witnesses(&self) -> &[Vec<T>] {
        &self.nef_witnesses
    }

    pub fn pair(&self, a: &[T], b: &[T]) -> T {
        bilinear(&self.gram, a, b)
    }

    /// `K²`.
    pub fn degree(&self) -> T {
        self.pair(&self.canonical, &self.canonical)
    }

    /// Plane blowups read classes as `(d; m₁, …, m_r)`.
    pub fn is_plane_blowup(&self) -> bool {
        matches!(self.kind, ModelKind::PlaneBlowup { .. })
    }
}

/// Integer class on a fixed model, coordinates in the model basis.
#[derive(Debug, Clone)]
pub struct DivisorClass<T: Scalar> {
    model: Surface<T>,
    coeffs: Vec<T>,
}

impl<T: Scalar> PartialEq for DivisorClass<T> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_model(&self.model, &other.model)
    }
}

impl<T: Scalar> Eq for DivisorClass<T> {}

fn same_model<T: Scalar>(a: &Surface<T>, b: &Surface<T>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<T: Scalar> DivisorClass<T> {
    pub fn new(model: &Surface<T>, coeffs: Vec<T>) -> Result<Self, PicardError> {
        if coeffs.len() != model.rank() {
            return Err(PicardError::WrongLength { expected: model.rank(), got: coeffs.len() });
        }
        Ok(Self { model: model.clone(), coeffs })
    }

    pub(crate) fn unchecked(model: &Surface<T>, coeffs: Vec<T>) -> Self {
        debug_assert_eq!(coeffs.len(), model.rank());
        Self { model: model.clone(), coeffs }
    }

    pub fn zero(model: &Surface<T>) -> Self {
        Self::unchecked(model, vec![T::zero(); model.rank()])
    }

    pub fn canonical(model: &Surface<T>) -> Self {
        Self::unchecked(model, model.canonical().to_vec())
    }

    /// `dL − Σ mᵢEᵢ` on a plane blowup.
    pub fn from_degree_multiplicities(model: &Surface<T>, d: T, m: &[T]) -> Result<Self, PicardError> {
        if !model.is_plane_blowup() {
            return Err(PicardError::InvalidModel(format!("(d; m) notation needs a plane blowup, not {}", model.kind())));
        }
        let coeffs = std::iter::once(d).chain(m.iter().map(|x| -x.clone())).collect();
        Self::new(model, coeffs)
    }

    /// `(d; m₁, …, m_r)` for a plane-blowup class.
    pub fn degree_multiplicities(&self) -> Option<(T, Vec<T>)> {
        self.model.is_plane_blowup().then(|| {
            (self.coeffs[0].clone(), self.coeffs[1..].iter().map(|x| -x.clone()).collect())
        })
    }

    pub fn model(&self) -> &Surface<T> {
        &self.model
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<(), PicardError> {
        if same_model(&self.model, &other.model) {
            Ok(())
        } else {
            Err(PicardError::ModelMismatch)
        }
    }

    /// Intersection number `A·B`.
    pub fn intersect(&self, other: &Self) -> Result<T, PicardError> {
        self.check(other)?;
        Ok(self.model.pair(&self.coeffs, &other.coeffs))
    }

    pub fn square(&self) -> T {
        self.model.pair(&self.coeffs, &self.coeffs)
    }

    pub fn dot_canonical(&self) -> T {
        self.model.pair(&self.coeffs, self.model.canonical())
    }

    /// `q·self + p·other`.
    pub fn combine(&self, q: &T, other: &Self, p: &T) -> Result<Self, PicardError> {
        self.check(other)?;
        let coeffs =
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| q.clone() * a.clone() + p.clone() * b.clone()).collect();
        Ok(Self::unchecked(&self.model, coeffs))
    }

    pub fn add(&self, other: &Self) -> Result<Self, PicardError> {
        self.combine(&T::one(), other, &T::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PicardError> {
        self.combine(&T::one(), other, &-T::one())
    }

    pub fn scaled(&self, s: &T) -> Self {
        Self::unchecked(&self.model, self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// `q·self + p·K`.
    pub fn plus_canonical(&self, q: &T, p: &T) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(self.model.canonical())
            .map(|(a, k)| q.clone() * a.clone() + p.clone() * k.clone())
            .collect();
        Self::unchecked(&self.model, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Largest `k` with `self = k·P` for an integral `P`.
    pub fn content(&self) -> T {
        content(&self.coeffs)
    }

    /// `self / k` when exact.
    pub fn divided(&self, k: &T) -> Option<Self> {
        if k.is_zero() || self.coeffs.iter().any(|c| !(c.clone() % k.clone()).is_zero()) {
            return None;
        }
        Some(Self::unchecked(&self.model, self.coeffs.iter().map(|c| c.clone() / k.clone()).collect()))
    }

    /// `(P² + P·K)/2 + 1`.
    pub fn arithmetic_genus(&self) -> Ratio<T> {
        Ratio::new(self.square() + self.dot_canonical(), T::of(2)) + Ratio::from_integer(T::one())
    }
}

impl<T: Scalar> fmt::Display for DivisorClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[T]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self.degree_multiplicities() {
            Some((d, m)) if m.is_empty() => write!(f, "({d})"),
            Some((d, m)) => write!(f, "({d};{})", join(&m)),
            None => write!(f, "[{}]", join(&self.coeffs)),
        }
    }
}

/// `A·B`, refusing classes on different models.
pub fn intersect<T: Scalar>(a: &DivisorClass<T>, b: &DivisorClass<T>) -> Result<T, PicardError> {
    a.intersect(b)
}
