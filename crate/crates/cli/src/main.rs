//! `adjoint-keel`: level, keel and parametric-degree bounds from the
//! command line.

mod text;

use std::path::Path;
use std::process::ExitCode;

use adjoint_keel::adjoint::{
    adjoint_chain, bounds_from_chain, check_chain, example_high_report, AdjointError, InvariantCheck,
};
use adjoint_keel::io::{
    parse_polygon, parse_surface, BoundsReport, HighReport, InputError, KeelReport, LevelReport, OracleBlock,
    PolygonChainReport, SurfaceChainReport, WithOracle,
};
use adjoint_keel::oracle::{DEFAULT_SEED, SEED_VARIABLE};
use adjoint_keel::polygon::{level_keel, polygon_adjoint_chain, svg::render_chain};
use adjoint_keel::selfcheck::{builtin_checks, polygon_oracle_checks, surface_oracle_checks};
use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Level and keel.
    Level,
    /// Keel and the face or endpoint it is read from.
    Keel,
    /// The full adjoint chain with invariant checks.
    Chain,
    /// Lower and upper bounds on the parametric degree.
    Bounds,
    /// The high-degree surface family at odd `n ≥ 5`.
    ExampleHigh,
    /// Rerun every built-in example and invariant suite.
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

/// Exact level and keel of rational surfaces.
#[derive(Debug, Parser)]
#[command(name = "adjoint-keel", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Polygon input: inline JSON or a file path. An array is a batch.
    #[arg(long, conflicts_with = "surface")]
    polygon: Option<String>,
    /// Surface and class input: inline JSON or a file path. An array is a batch.
    #[arg(long)]
    surface: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Compare against the brute-force oracles; exit 2 on disagreement.
    #[arg(long)]
    oracle: bool,
    /// Seed of the general-position samples.
    #[arg(long, env = SEED_VARIABLE, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Family index for `example-high`.
    #[arg(long)]
    n: Option<i64>,
}

/// Why a run stopped short of exit 0.
enum Failure {
    Input(InputError),
    Invariant(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

/// One finished item: the report and whether every check it ran passed.
struct Item {
    report: Value,
    passed: bool,
}

fn to_value<R: Serialize>(report: &R) -> Value {
    serde_json::to_value(report).expect("reports serialize")
}

fn item<R: Serialize>(report: R, oracle: Option<OracleBlock>) -> Item {
    let passed = oracle.as_ref().is_none_or(|o| o.passed);
    Item { report: to_value(&WithOracle { report, oracle }), passed }
}

fn read_input(flag: &str, raw: &str) -> Result<Value, InputError> {
    let text = if raw.trim_start().starts_with(['{', '[']) {
        raw.to_string()
    } else {
        std::fs::read_to_string(Path::new(raw)).map_err(|e| InputError::new(flag, format!("cannot read {raw}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| InputError::new(flag, format!("invalid JSON: {e}")))
}

fn adjoint_failure(e: AdjointError) -> Failure {
    match e {
        AdjointError::NotNef(_) | AdjointError::NotBig(_) | AdjointError::NotEffective(_) => {
            Failure::Input(InputError::new("D", e.to_string()))
        }
        AdjointError::BadN(_) => Failure::Input(InputError::new("n", e.to_string())),
        other => Failure::Invariant(other.to_string()),
    }
}

fn polygon_item(cli: &Cli, value: &Value) -> Result<Item, Failure> {
    let polygon = parse_polygon(value)?;
    let inv = level_keel(&polygon);
    let oracle = cli.oracle.then(|| OracleBlock::new(cli.seed, polygon_oracle_checks(&polygon)));
    Ok(match cli.command {
        Command::Level => item(LevelReport::new(&inv.level, &inv.keel), oracle),
        Command::Keel => item(KeelReport::polygon(&inv), oracle),
        Command::Bounds => item(BoundsReport::polygon(&inv), oracle),
        Command::Chain => item(PolygonChainReport::new(&inv, &polygon_adjoint_chain(&polygon)), oracle),
        Command::ExampleHigh | Command::Check => unreachable!("validated before dispatch"),
    })
}

fn surface_item(cli: &Cli, value: &Value) -> Result<Item, Failure> {
    let divisor = parse_surface(value)?;
    let chain = adjoint_chain(&divisor).map_err(adjoint_failure)?;
    let bounds = bounds_from_chain(&chain).map_err(adjoint_failure)?;
    let oracle = cli.oracle.then(|| {
        let mut checks = check_chain(&divisor, &chain, Some(&bounds));
        checks.extend(surface_oracle_checks(&divisor, &chain, cli.seed));
        OracleBlock::new(cli.seed, checks)
    });
    Ok(match cli.command {
        Command::Level => item(LevelReport::new(&chain.level, &chain.keel), oracle),
        Command::Keel => item(KeelReport::surface(&chain), oracle),
        Command::Bounds => item(BoundsReport::surface(&bounds), oracle),
        Command::Chain => {
            let checks = check_chain(&divisor, &chain, Some(&bounds));
            item(SurfaceChainReport::new(&chain, Some(&bounds), checks), oracle)
        }
        Command::ExampleHigh | Command::Check => unreachable!("validated before dispatch"),
    })
}

fn high_item(cli: &Cli, n: i64) -> Result<Item, Failure> {
    let r = example_high_report::<i64>(n).map_err(adjoint_failure)?;
    let oracle = cli.oracle.then(|| {
        let checks = vec![
            InvariantCheck::new("sandwich", r.sandwich, || format!("{} ≤ {} ≤ {} fails", r.lower, r.param_degree, r.upper)),
            InvariantCheck::new("hyperplane_square_is_degree", r.hyperplane_square == 2 * n + 1, || {
                format!("H² = {}", r.hyperplane_square)
            }),
            InvariantCheck::new("keel_from_level_system", r.keel_from_system == r.keel, || {
                format!("level system gives {}", r.keel_from_system)
            }),
        ];
        OracleBlock::new(cli.seed, checks)
    });
    Ok(item(HighReport::new(&r), oracle))
}

#[derive(Serialize)]
struct CheckReport {
    seed: u64,
    checks: Vec<InvariantCheck>,
    passed: bool,
}

/// Runs every input item; a batch keeps input order.
fn run_items(cli: &Cli) -> Result<(Vec<Item>, bool), Failure> {
    let (flag, raw, per_item): (&str, &String, fn(&Cli, &Value) -> Result<Item, Failure>) =
        match (&cli.polygon, &cli.surface) {
            (Some(p), None) => ("polygon", p, polygon_item),
            (None, Some(s)) => ("surface", s, surface_item),
            _ => return Err(InputError::new("--polygon", "give exactly one of --polygon or --surface").into()),
        };
    let value = read_input(&format!("--{flag}"), raw)?;
    match value {
        Value::Array(items) => {
            let results: Vec<Result<Item, Failure>> = items.par_iter().map(|v| per_item(cli, v)).collect();
            let mut out = Vec::with_capacity(results.len());
            for (i, r) in results.into_iter().enumerate() {
                match r {
                    Ok(item) => out.push(item),
                    Err(Failure::Input(e)) => return Err(Failure::Input(e.within(&format!("[{i}]")))),
                    Err(Failure::Invariant(m)) => return Err(Failure::Invariant(format!("item {i}: {m}"))),
                }
            }
            Ok((out, true))
        }
        single => Ok((vec![per_item(cli, &single)?], false)),
    }
}

fn render(items: Vec<Item>, batch: bool, format: Format) -> String {
    let value = if batch {
        Value::Array(items.into_iter().map(|i| i.report).collect())
    } else {
        items.into_iter().next().expect("one item").report
    };
    match format {
        Format::Text => text::render(&value),
        _ => serde_json::to_string(&value).expect("values serialize"),
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    if cli.format == Format::Svg {
        if cli.polygon.is_none() || !matches!(cli.command, Command::Level | Command::Keel | Command::Chain) {
            return Err(InputError::new("--format", "svg renders the chain of a single polygon input").into());
        }
    }
    match cli.command {
        Command::Check => {
            let checks = builtin_checks(cli.seed);
            let passed = checks.iter().all(|c| c.passed);
            let report = to_value(&CheckReport { seed: cli.seed, checks, passed });
            let out = match cli.format {
                Format::Text => text::render(&report),
                _ => serde_json::to_string(&report).expect("values serialize"),
            };
            Ok((out, passed))
        }
        Command::ExampleHigh => {
            let n = cli.n.ok_or_else(|| InputError::new("--n", "example-high needs --n"))?;
            let item = high_item(cli, n)?;
            let passed = item.passed;
            Ok((render(vec![item], false, cli.format), passed))
        }
        _ if cli.format == Format::Svg => {
            let value = read_input("--polygon", cli.polygon.as_deref().expect("checked above"))?;
            if value.is_array() {
                return Err(InputError::new("--polygon", "svg renders one polygon, not a batch").into());
            }
            let polygon = parse_polygon(&value)?;
            let passed = !cli.oracle || polygon_oracle_checks(&polygon).iter().all(|c| c.passed);
            Ok((render_chain(&polygon_adjoint_chain(&polygon)), passed))
        }
        _ => {
            let (items, batch) = run_items(cli)?;
            let passed = items.iter().all(|i| i.passed);
            Ok((render(items, batch, cli.format), passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage problems are input errors; help and version are not
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok((out, passed)) => {
            println!("{out}");
            if passed || (!cli.oracle && cli.command != Command::Check) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(m)) => {
            eprintln!("invariant failure: {m}");
            ExitCode::from(2)
        }
    }
}
