//! JSON input schemas and report shapes for the command line tool.
//!
//! Polygon input: `{"vertices": [[x, y], ...]}`. Surface input names a
//! built-in model and a class `D`, or gives the lattice directly:
//!
//! ```json
//! {"model": "plane_blowup", "r": 6, "D": [3, 1, 1, 1, 1, 1, 1]}
//! {"model": "hirzebruch", "n": 2, "D": [1, 3]}
//! {"gram": [[0, 1], [1, 0]], "K": [-2, -2], "effective_generators": [[1, 0], [0, 1]], "contractibles": [], "D": [2, 5]}
//! ```
//!
//! On plane blowups `D` is written `(d; m₁, …, m_r)` for `dL − Σ mᵢEᵢ`;
//! elsewhere it lists coordinates in the model basis. Reports use the same
//! convention. Fractions are lowest-terms strings.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::adjoint::{AdjointChainResult, EndpointCase, EndpointSurface, HighExampleReport, InvariantCheck, PdegBounds};
use crate::picard::{DivisorClass, SurfaceModel};
use crate::polygon::{LatticePolygon, PolygonChain, PolygonEndpoint, PolygonInvariants, RationalPolygon, Shape};
use crate::scalar::{fraction_string, lift};

type Surface = crate::picard::Surface<i64>;

/// Malformed input, with the path of the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub field: String,
    pub message: String,
}

impl InputError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self { field: field.into(), message: message.into() }
    }

    /// Prefixes the field path, for batch items and nested objects.
    pub fn within(mut self, prefix: &str) -> Self {
        self.field = if self.field.is_empty() {
            prefix.to_string()
        } else if self.field.starts_with('[') {
            format!("{prefix}{}", self.field)
        } else {
            format!("{prefix}.{}", self.field)
        };
        self
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "field `{}`: {}", self.field, self.message)
        }
    }
}

impl std::error::Error for InputError {}

fn object<'a>(value: &'a Value, what: &str) -> Result<&'a serde_json::Map<String, Value>, InputError> {
    value.as_object().ok_or_else(|| InputError::new("", format!("{what} input must be a JSON object")))
}

fn field<'a>(map: &'a serde_json::Map<String, Value>, name: &str) -> Result<&'a Value, InputError> {
    map.get(name).ok_or_else(|| InputError::new(name, "missing"))
}

fn integer(value: &Value, path: &str) -> Result<i64, InputError> {
    value.as_i64().ok_or_else(|| InputError::new(path, format!("expected an integer, got {value}")))
}

fn vector(value: &Value, path: &str) -> Result<Vec<i64>, InputError> {
    let items = value.as_array().ok_or_else(|| InputError::new(path, "expected an array of integers"))?;
    items.iter().enumerate().map(|(i, v)| integer(v, &format!("{path}[{i}]"))).collect()
}

fn matrix(value: &Value, path: &str) -> Result<Vec<Vec<i64>>, InputError> {
    let rows = value.as_array().ok_or_else(|| InputError::new(path, "expected an array of integer arrays"))?;
    rows.iter().enumerate().map(|(i, r)| vector(r, &format!("{path}[{i}]"))).collect()
}

pub fn parse_polygon(value: &Value) -> Result<LatticePolygon<i64>, InputError> {
    let map = object(value, "polygon")?;
    let rows = matrix(field(map, "vertices")?, "vertices")?;
    let points = rows
        .iter()
        .enumerate()
        .map(|(i, r)| match r.as_slice() {
            [x, y] => Ok([*x, *y]),
            _ => Err(InputError::new(format!("vertices[{i}]"), format!("expected [x, y], got {} entries", r.len()))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    LatticePolygon::normalize(&points).map_err(|e| InputError::new("vertices", e.to_string()))
}

fn parse_model(map: &serde_json::Map<String, Value>) -> Result<Surface, InputError> {
    let name = match map.get("model") {
        Some(v) => v.as_str().ok_or_else(|| InputError::new("model", "expected a string"))?,
        None if map.contains_key("gram") => "custom",
        None => return Err(InputError::new("model", "missing")),
    };
    fn picard(field: &'static str) -> impl Fn(crate::picard::PicardError) -> InputError {
        move |e| InputError::new(field, e.to_string())
    }
    match name {
        "plane_blowup" => {
            let r = integer(field(map, "r")?, "r")?;
            let r = usize::try_from(r).map_err(|_| InputError::new("r", format!("must be between 0 and 8, got {r}")))?;
            SurfaceModel::plane_blowup(r).map_err(picard("r"))
        }
        "hirzebruch" => SurfaceModel::hirzebruch(integer(field(map, "n")?, "n")?).map_err(picard("n")),
        "quadric" => Ok(SurfaceModel::quadric()),
        "quadric_deg2_blowup" => Ok(SurfaceModel::quadric_deg2_blowup()),
        "plane_deg4_blowup" => Ok(SurfaceModel::plane_deg4_blowup()),
        "custom" => {
            let gram = matrix(field(map, "gram")?, "gram")?;
            let canonical = vector(field(map, "K")?, "K")?;
            let generators = matrix(field(map, "effective_generators")?, "effective_generators")?;
            let contractibles = match map.get("contractibles") {
                Some(v) => matrix(v, "contractibles")?,
                None => Vec::new(),
            };
            SurfaceModel::custom(gram, canonical, generators, contractibles).map_err(picard("gram"))
        }
        other => Err(InputError::new(
            "model",
            format!(
                "unknown model {other:?}; expected plane_blowup, hirzebruch, quadric, quadric_deg2_blowup, \
                 plane_deg4_blowup or custom"
            ),
        )),
    }
}

/// The class `D` on its model.
pub fn parse_surface(value: &Value) -> Result<DivisorClass<i64>, InputError> {
    let map = object(value, "surface")?;
    let model = parse_model(map)?;
    let d = vector(field(map, "D")?, "D")?;
    let class = if model.is_plane_blowup() {
        match d.split_first() {
            Some((degree, m)) => DivisorClass::from_degree_multiplicities(&model, *degree, m),
            None => return Err(InputError::new("D", "expected (d; m₁, …, m_r), got an empty array")),
        }
    } else {
        DivisorClass::new(&model, d)
    };
    class.map_err(|e| InputError::new("D", e.to_string()))
}

/// Class vector in the input convention.
pub fn class_vector(class: &DivisorClass<i64>) -> Vec<i64> {
    match class.degree_multiplicities() {
        Some((d, m)) => std::iter::once(d).chain(m).collect(),
        None => class.coeffs().to_vec(),
    }
}

fn frac(value: &num_rational::Ratio<i64>) -> String {
    fraction_string(value)
}

fn point_strings(polygon: &RationalPolygon<i64>) -> Vec<[String; 2]> {
    polygon.vertices().iter().map(|p| [frac(&p[0]), frac(&p[1])]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub level: String,
    pub keel: String,
}

impl LevelReport {
    pub fn new(level: &num_rational::Ratio<i64>, keel: &num_rational::Ratio<i64>) -> Self {
        Self { level: frac(level), keel: frac(keel) }
    }
}

/// Keel with what it was read from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeelReport {
    pub keel: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimal_face: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoint: Option<&'static str>,
}

impl KeelReport {
    pub fn polygon(inv: &PolygonInvariants<i64>) -> Self {
        Self { keel: frac(&inv.keel), optimal_face: Some(point_strings(&inv.optimal_face)), endpoint: None }
    }

    pub fn surface(chain: &AdjointChainResult<i64>) -> Self {
        Self { keel: frac(&chain.keel), optimal_face: None, endpoint: Some(chain.endpoint.tag()) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub level: String,
    pub keel: String,
    pub lower: String,
    pub upper: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructive_upper: Option<String>,
}

impl BoundsReport {
    pub fn surface(b: &PdegBounds<i64>) -> Self {
        Self {
            level: frac(&b.level),
            keel: frac(&b.keel),
            lower: frac(&b.lower),
            upper: frac(&b.upper),
            constructive_upper: b.constructive_upper.map(|c| c.to_string()),
        }
    }

    /// Toric bounds: no constructive parametrization is attached.
    pub fn polygon(inv: &PolygonInvariants<i64>) -> Self {
        let lower = lift(3) * inv.level + inv.keel;
        let upper = lift(6) * inv.level + lift(2) * inv.keel;
        Self { level: frac(&inv.level), keel: frac(&inv.keel), lower: frac(&lower), upper: frac(&upper), constructive_upper: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HighReport {
    pub level: String,
    pub keel: String,
    pub lower: String,
    pub param_degree: i64,
    pub sandwich: &'static str,
}

impl HighReport {
    pub fn new(r: &HighExampleReport<i64>) -> Self {
        Self {
            level: frac(&r.level),
            keel: frac(&r.keel),
            lower: frac(&r.lower),
            param_degree: r.param_degree,
            sandwich: if r.sandwich { "ok" } else { "violated" },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonMember {
    pub shape: &'static str,
    pub vertices: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonChainReport {
    pub level: String,
    pub keel: String,
    pub optimal_face: Vec<[String; 2]>,
    pub chain: Vec<PolygonMember>,
    pub endpoint: PolygonEndpoint<i64>,
}

fn shape_name(shape: Shape) -> &'static str {
    match shape {
        Shape::Empty => "empty",
        Shape::Point => "point",
        Shape::Segment => "segment",
        Shape::TwoDimensional => "polygon",
    }
}

impl PolygonChainReport {
    pub fn new(inv: &PolygonInvariants<i64>, chain: &PolygonChain<i64>) -> Self {
        Self {
            level: frac(&inv.level),
            keel: frac(&inv.keel),
            optimal_face: point_strings(&inv.optimal_face),
            chain: chain
                .members
                .iter()
                .map(|m| PolygonMember { shape: shape_name(m.shape()), vertices: point_strings(m) })
                .collect(),
            endpoint: chain.endpoint.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub model: String,
    #[serde(rename = "D")]
    pub divisor: Vec<i64>,
    /// Exceptional classes blown down before this step, each in the
    /// coordinates of the surface it lives on.
    pub blown_down: Vec<BlownDown>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlownDown {
    pub model: String,
    pub class: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndpointReport {
    pub case: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiber: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsBlock {
    pub lower: String,
    pub lower_int: i64,
    pub upper: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructive_upper: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoint_surface: Option<EndpointSurface<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceChainReport {
    pub steps: Vec<StepReport>,
    pub a: usize,
    pub endpoint: EndpointReport,
    pub level: String,
    pub keel: String,
    pub bounds: Option<BoundsBlock>,
    pub checks: Vec<InvariantCheck>,
    pub checks_passed: bool,
}

impl SurfaceChainReport {
    pub fn new(chain: &AdjointChainResult<i64>, bounds: Option<&PdegBounds<i64>>, checks: Vec<InvariantCheck>) -> Self {
        let steps = chain
            .steps
            .iter()
            .map(|s| StepReport {
                model: s.model().kind().to_string(),
                divisor: class_vector(&s.divisor),
                blown_down: s
                    .contractions
                    .iter()
                    .map(|c| BlownDown { model: c.source.kind().to_string(), class: class_vector(&c.exceptional()) })
                    .collect(),
            })
            .collect();
        let (k, fiber) = match &chain.endpoint {
            EndpointCase::FiberMultiple { k, fiber } | EndpointCase::HalfFiber { k, fiber } => {
                (Some(*k), Some(class_vector(fiber)))
            }
            _ => (None, None),
        };
        let bounds = bounds.map(|b| BoundsBlock {
            lower: frac(&b.lower),
            lower_int: b.lower_int,
            upper: frac(&b.upper),
            constructive_upper: b.constructive_upper.map(|c| c.to_string()),
            endpoint_surface: b.endpoint_surface.clone(),
        });
        let checks_passed = checks.iter().all(|c| c.passed);
        Self {
            steps,
            a: chain.a,
            endpoint: EndpointReport { case: chain.endpoint.tag(), k, fiber },
            level: frac(&chain.level),
            keel: frac(&chain.keel),
            bounds,
            checks,
            checks_passed,
        }
    }
}

/// Oracle comparisons attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleBlock {
    pub seed: u64,
    pub checks: Vec<InvariantCheck>,
    pub passed: bool,
}

impl OracleBlock {
    pub fn new(seed: u64, checks: Vec<InvariantCheck>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self { seed, checks, passed }
    }
}

/// A report with an optional oracle block appended.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WithOracle<R> {
    #[serde(flatten)]
    pub report: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn surface_inputs() {
        let d = parse_surface(&json!({"model": "plane_blowup", "r": 6, "D": [3, 1, 1, 1, 1, 1, 1]})).unwrap();
        assert_eq!(d, DivisorClass::canonical(d.model()).scaled(&-1));
        assert_eq!(class_vector(&d), vec![3, 1, 1, 1, 1, 1, 1]);
        let d = parse_surface(&json!({"model": "hirzebruch", "n": 2, "D": [1, 3]})).unwrap();
        assert_eq!(d.coeffs(), &[1, 3]);
        let d = parse_surface(&json!({
            "gram": [[0, 1], [1, 0]], "K": [-2, -2], "effective_generators": [[1, 0], [0, 1]], "contractibles": [], "D": [2, 5]
        }))
        .unwrap();
        assert_eq!(d.square(), 20);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let err = |v: Value| parse_surface(&v).unwrap_err().field;
        assert_eq!(err(json!({"model": "plane_blowup", "r": 9, "D": [1]})), "r");
        assert_eq!(err(json!({"model": "plane_blowup", "r": 2, "D": [1, 1]})), "D");
        assert_eq!(err(json!({"model": "quadric", "D": [1, "x"]})), "D[1]");
        assert_eq!(err(json!({"model": "torus", "D": [1]})), "model");
        assert_eq!(err(json!({"model": "hirzebruch", "D": [1, 1]})), "n");
        let err = parse_polygon(&json!({"vertices": [[0, 0], [1]]})).unwrap_err();
        assert_eq!(err.field, "vertices[1]");
        assert_eq!(parse_polygon(&json!({"vertices": [[0, 0], [2, 2], [1, 1]]})).unwrap_err().field, "vertices");
        assert_eq!(err.within("[3]").field, "[3].vertices[1]");
    }

    #[test]
    fn report_shapes() {
        let d = parse_surface(&json!({"model": "quadric", "D": [2, 5]})).unwrap();
        let b = crate::adjoint::pdeg_bounds(&d).unwrap();
        assert_eq!(
            serde_json::to_string(&BoundsReport::surface(&b)).unwrap(),
            r#"{"level":"1","keel":"3","lower":"6","upper":"12","constructive_upper":"7"}"#
        );
        let high = crate::adjoint::example_high_report::<i64>(5).unwrap();
        assert_eq!(
            serde_json::to_string(&HighReport::new(&high)).unwrap(),
            r#"{"level":"11/2","keel":"5","lower":"43/2","param_degree":26,"sandwich":"ok"}"#
        );
        let with = WithOracle { report: LevelReport::new(&lift(2), &lift(0)), oracle: None };
        assert_eq!(serde_json::to_string(&with).unwrap(), r#"{"level":"2","keel":"0"}"#);
    }
}
