//! Command-line front end: `eval`, `verify`, `umbral-expand`, `gf-check`.
//!
//! Arguments after the family are `key=value` pairs. `verify` and
//! `gf-check` also accept grids: `key=lo..hi` (inclusive, unit step),
//! `key=lo..hi:count` (linear spacing) or `key=v1,v2,v3`. Grid points are
//! enumerated with the last key varying fastest.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails, 2 on a usage
//! error (one `error:` line on the error stream).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::integrals::{self, FormulaId, GaussianParams, IntegralParams, PrefactorConvention};
use crate::oracle::QuadratureSpec;
use crate::poly::{PolyEval, PolyFamily, PolyIndex, TwoIndexArgs};
use crate::special::{bessel_tricomi0, wright2, OrderParam};
use crate::umbral::{
    laguerre_explicit, laguerre_umbral, q_explicit, q_umbral, vacuum_reduce, wright_explicit, wright_umbral,
};
use crate::verify::{gf_check, verify_all, GfFamily, GfGrid, Tolerance, VerificationReport, VerifyOptions};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest degree `umbral-expand` accepts.
pub const MAX_EXPAND_DEGREE: u32 = 20;
/// Largest truncation order `gf-check` accepts.
pub const MAX_GF_TERMS: usize = 40;
pub const GF_TOLERANCE: f64 = 1e-10;

/// Environment variable holding the seed of randomized property tests.
pub const SEED_ENV: &str = "UMBRAL_LAGUERRE_SEED";

/// Seed from [`SEED_ENV`], or `default` when unset or unparsable.
pub fn property_seed(default: u64) -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

/// Largest number of points a single grid axis may expand to.
const MAX_AXIS_POINTS: usize = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "umbral-laguerre",
    version,
    about = "Laguerre-Gaussian integrals in closed form, checked two ways"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a polynomial, special function or closed-form integral
    Eval {
        /// hermite2, laguerre2, laguerre-assoc, q, hermite-2index, q-2index,
        /// t, wright2, tricomi0, or an integral family
        family: String,
        /// key=value arguments
        args: Vec<String>,
        #[arg(long, default_value = "m")]
        prefactor_convention: String,
    },
    /// Compare closed forms with the quadrature oracle over a grid
    Verify {
        family: String,
        /// key=value, key=lo..hi[:count] or key=v1,v2,...
        args: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 1e-9)]
        rel_tol: f64,
        /// Highest Gauss-Hermite order the oracle may use
        #[arg(long)]
        quad_order: Option<usize>,
        #[arg(long, default_value = "m")]
        prefactor_convention: String,
    },
    /// Reduce an umbral construction exactly and certify it
    UmbralExpand {
        #[arg(value_enum)]
        target: Target,
        /// n=<degree> and, for q and wright, nu=<integer order>
        args: Vec<String>,
    },
    /// Truncated generating-function series against the closed form
    GfCheck {
        /// hermite or q
        family: String,
        /// N=<terms>, optional grids t=, x=, y=, nu=
        args: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Laguerre,
    Q,
    Wright,
}

#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(format!("write failed: {e}"))
    }
}

type CmdResult = Result<i32, Usage>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Eval {
            family,
            args,
            prefactor_convention,
        } => cmd_eval(&family, &args, &prefactor_convention, out),
        Command::Verify {
            family,
            args,
            format,
            rel_tol,
            quad_order,
            prefactor_convention,
        } => cmd_verify(
            &family,
            &args,
            format,
            rel_tol,
            quad_order,
            &prefactor_convention,
            out,
            err,
        ),
        Command::UmbralExpand { target, args } => cmd_umbral_expand(target, &args, out),
        Command::GfCheck { family, args } => cmd_gf_check(&family, &args, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Splits `key=value` arguments, rejecting duplicates and keys outside `allowed`.
fn split_pairs<'a>(
    args: &'a [String],
    allowed: &[&str],
    context: &str,
) -> Result<Vec<(&'a str, &'a str)>, Usage> {
    let mut seen = Vec::new();
    let mut pairs = Vec::with_capacity(args.len());
    for arg in args {
        let (key, value) = arg
            .split_once('=')
            .ok_or_else(|| Usage(format!("expected key=value, got '{arg}'")))?;
        if !allowed.contains(&key) {
            return Err(Usage(format!(
                "unknown parameter '{key}' for {context} (expected {})",
                allowed.join(", ")
            )));
        }
        if seen.contains(&key) {
            return Err(Usage(format!("parameter '{key}' given twice")));
        }
        seen.push(key);
        pairs.push((key, value));
    }
    Ok(pairs)
}

fn parse_real(key: &str, text: &str) -> Result<f64, Usage> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| Usage(format!("{key}: '{text}' is not a number")))?;
    if !v.is_finite() {
        return Err(Usage(format!("{key}: '{text}' is not finite")));
    }
    Ok(v)
}

/// Expands one grid axis.
fn parse_axis(key: &str, text: &str) -> Result<Vec<f64>, Usage> {
    if let Some((lo, rest)) = text.split_once("..") {
        let (hi, count) = match rest.split_once(':') {
            Some((hi, count)) => {
                let count: usize = count
                    .parse()
                    .map_err(|_| Usage(format!("{key}: bad point count '{count}'")))?;
                (hi, Some(count))
            }
            None => (rest, None),
        };
        let lo = parse_real(key, lo)?;
        let hi = parse_real(key, hi)?;
        if lo > hi {
            return Err(Usage(format!("{key}: empty range {lo}..{hi}")));
        }
        let points: Vec<f64> = match count {
            Some(0) => return Err(Usage(format!("{key}: point count must be positive"))),
            Some(1) if lo == hi => vec![lo],
            Some(1) => return Err(Usage(format!("{key}: one point cannot span {lo}..{hi}"))),
            Some(k) => {
                if k > MAX_AXIS_POINTS {
                    return Err(Usage(format!("{key}: more than {MAX_AXIS_POINTS} points")));
                }
                (0..k)
                    .map(|i| lo + (hi - lo) * i as f64 / (k - 1) as f64)
                    .collect()
            }
            None => {
                let steps = (hi - lo + 1e-9).floor();
                if steps >= MAX_AXIS_POINTS as f64 {
                    return Err(Usage(format!("{key}: more than {MAX_AXIS_POINTS} points")));
                }
                (0..=steps as usize).map(|i| lo + i as f64).collect()
            }
        };
        return Ok(points);
    }
    text.split(',').map(|v| parse_real(key, v)).collect()
}

fn to_index(key: &str, v: f64) -> Result<usize, Usage> {
    if v < 0.0 || v.fract() != 0.0 || v > u32::MAX as f64 {
        return Err(Usage(format!("{key}: {v} is not a non-negative integer")));
    }
    Ok(v as usize)
}

fn to_order(key: &str, v: f64) -> Result<OrderParam, Usage> {
    OrderParam::new(v).map_err(|e| Usage(format!("{key}: {e}")))
}

/// Single values keyed by name, for commands that do not take grids.
fn scalar_values<'a>(pairs: &[(&'a str, &str)]) -> Result<BTreeMap<&'a str, f64>, Usage> {
    pairs
        .iter()
        .map(|&(k, v)| {
            if v.contains("..") || v.contains(',') {
                Err(Usage(format!("{k}: expected a single value, got '{v}'")))
            } else {
                Ok((k, parse_real(k, v)?))
            }
        })
        .collect()
}

fn require(values: &BTreeMap<&str, f64>, key: &str) -> Result<f64, Usage> {
    values
        .get(key)
        .copied()
        .ok_or_else(|| Usage(format!("missing parameter '{key}'")))
}

fn integral_params(formula: FormulaId, values: &BTreeMap<&str, f64>) -> Result<IntegralParams, Usage> {
    let mut p = IntegralParams::default();
    let mut alpha = None;
    let mut beta = 0.0;
    for &name in formula.parameter_names() {
        let v = match values.get(name) {
            Some(&v) => v,
            None if name == "beta" => continue,
            None => return Err(Usage(format!("{formula}: missing parameter '{name}'"))),
        };
        match name {
            "m" => p.m = to_index(name, v)?,
            "n" => p.n = to_index(name, v)?,
            "mu" => p.mu = to_order(name, v)?,
            "nu" => p.nu = to_order(name, v)?,
            "shift" => p.shift = v,
            "a" => p.a = v,
            "b" => p.b = v,
            "f" => p.f = v,
            "g" => p.g = v,
            "u" => p.u = v,
            "v" => p.v = v,
            "y" => p.y = v,
            "z" => p.z = v,
            "alpha" => alpha = Some(v),
            "beta" => beta = v,
            _ => unreachable!("parameter table out of sync"),
        }
    }
    p.gaussian = GaussianParams::new(alpha.unwrap_or(1.0), beta)?;
    p.validate_for(formula)?;
    Ok(p)
}

fn poly_family(name: &str) -> Option<(PolyFamily, &'static [&'static str])> {
    Some(match name {
        "hermite2" => (PolyFamily::Hermite2, &["n", "x", "y"]),
        "laguerre2" => (PolyFamily::Laguerre2, &["n", "x", "y"]),
        "laguerre-assoc" => (PolyFamily::LaguerreAssoc, &["n", "nu", "x", "y"]),
        "q" => (PolyFamily::Q, &["n", "nu", "x", "y"]),
        "hermite-2index" => (PolyFamily::Hermite2Index, &["m", "n", "x", "y", "w", "z", "tau"]),
        "q-2index" => (
            PolyFamily::Q2Index,
            &["m", "n", "mu", "nu", "x", "y", "w", "z", "tau"],
        ),
        "t" => (PolyFamily::T, &["m", "n", "nu", "x", "y", "w", "z", "tau"]),
        _ => return None,
    })
}

fn eval_value(family: &str, args: &[String], convention: PrefactorConvention) -> Result<f64, Usage> {
    if let Some((fam, keys)) = poly_family(family) {
        let values = scalar_values(&split_pairs(args, keys, family)?)?;
        for &k in keys {
            require(&values, k)?;
        }
        let get = |k: &str| values.get(k).copied().unwrap_or(0.0);
        let index = PolyIndex {
            n: to_index("n", get("n"))?,
            m: if keys.contains(&"m") {
                Some(to_index("m", get("m"))?)
            } else {
                None
            },
        };
        let orders = (to_order("mu", get("mu"))?, to_order("nu", get("nu"))?);
        let xy = TwoIndexArgs {
            x: get("x"),
            y: get("y"),
            w: get("w"),
            z: get("z"),
            tau: get("tau"),
        };
        return Ok(PolyEval::new(fam, index, orders, xy)?.evaluate());
    }
    match family {
        "wright2" => {
            let values = scalar_values(&split_pairs(args, &["nu", "x"], family)?)?;
            let nu = to_order("nu", require(&values, "nu")?)?;
            Ok(wright2(nu.value(), require(&values, "x")?)?)
        }
        "tricomi0" => {
            let values = scalar_values(&split_pairs(args, &["x"], family)?)?;
            Ok(bessel_tricomi0(require(&values, "x")?))
        }
        _ => {
            let formula: FormulaId = family
                .parse()
                .map_err(|_| Usage(format!("unknown family '{family}'")))?;
            let values = scalar_values(&split_pairs(args, formula.parameter_names(), family)?)?;
            let params = integral_params(formula, &values)?;
            Ok(integrals::evaluate(formula, &params, convention)?.value)
        }
    }
}

fn cmd_eval(family: &str, args: &[String], convention: &str, out: &mut dyn Write) -> CmdResult {
    let convention: PrefactorConvention = convention.parse()?;
    let value = eval_value(family, args, convention)?;
    writeln!(out, "{value:.16e}")?;
    Ok(EXIT_PASS)
}

/// Every combination of the axis values, last axis fastest.
fn cartesian<'a>(axes: &[(&'a str, Vec<f64>)]) -> Vec<BTreeMap<&'a str, f64>> {
    let mut points = vec![BTreeMap::new()];
    for (key, values) in axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.insert(*key, v);
                    q
                })
            })
            .collect();
    }
    points
}

fn parse_axes<'a>(pairs: &[(&'a str, &str)]) -> Result<Vec<(&'a str, Vec<f64>)>, Usage> {
    let axes: Vec<_> = pairs
        .iter()
        .map(|&(k, v)| Ok((k, parse_axis(k, v)?)))
        .collect::<Result<_, Usage>>()?;
    let total = axes
        .iter()
        .try_fold(1usize, |acc, (_, v)| acc.checked_mul(v.len()));
    match total {
        Some(t) if t <= MAX_AXIS_POINTS => Ok(axes),
        _ => Err(Usage(format!("grid has more than {MAX_AXIS_POINTS} points"))),
    }
}

#[derive(Serialize)]
struct CsvRow {
    formula_id: &'static str,
    m: usize,
    n: usize,
    mu: f64,
    nu: f64,
    shift: f64,
    a: f64,
    b: f64,
    f: f64,
    g: f64,
    u: f64,
    v: f64,
    y: f64,
    z: f64,
    alpha: f64,
    beta: f64,
    prefactor_convention: PrefactorConvention,
    closed_form: f64,
    oracle: f64,
    abs_err: f64,
    rel_err: f64,
    oracle_est_error: f64,
    oracle_orders_used: usize,
    oracle_converged: bool,
    cancellation_magnitude: f64,
    catastrophic_cancellation: bool,
    pass: bool,
}

/// Column order of `verify --format=csv`.
pub const CSV_COLUMNS: [&str; 27] = [
    "formula_id",
    "m",
    "n",
    "mu",
    "nu",
    "shift",
    "a",
    "b",
    "f",
    "g",
    "u",
    "v",
    "y",
    "z",
    "alpha",
    "beta",
    "prefactor_convention",
    "closed_form",
    "oracle",
    "abs_err",
    "rel_err",
    "oracle_est_error",
    "oracle_orders_used",
    "oracle_converged",
    "cancellation_magnitude",
    "catastrophic_cancellation",
    "pass",
];

impl From<&VerificationReport> for CsvRow {
    fn from(r: &VerificationReport) -> Self {
        let p = &r.params;
        Self {
            formula_id: r.formula_id.name(),
            m: p.m,
            n: p.n,
            mu: p.mu,
            nu: p.nu,
            shift: p.shift,
            a: p.a,
            b: p.b,
            f: p.f,
            g: p.g,
            u: p.u,
            v: p.v,
            y: p.y,
            z: p.z,
            alpha: p.alpha,
            beta: p.beta,
            prefactor_convention: r.prefactor_convention,
            closed_form: r.closed_form,
            oracle: r.oracle,
            abs_err: r.abs_err,
            rel_err: r.rel_err,
            oracle_est_error: r.oracle_metadata.est_error,
            oracle_orders_used: r.oracle_metadata.orders_used,
            oracle_converged: r.oracle_metadata.converged,
            cancellation_magnitude: r.cancellation_magnitude,
            catastrophic_cancellation: r.catastrophic_cancellation,
            pass: r.pass,
        }
    }
}

fn write_reports(reports: &[VerificationReport], format: Format, out: &mut dyn Write) -> Result<(), Usage> {
    match format {
        Format::Json => {
            for r in reports {
                let line = serde_json::to_string(r).map_err(|e| Usage(e.to_string()))?;
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(out);
            for r in reports {
                w.serialize(CsvRow::from(r)).map_err(|e| Usage(e.to_string()))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    family: &str,
    args: &[String],
    format: Format,
    rel_tol: f64,
    quad_order: Option<usize>,
    convention: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let formula: FormulaId = family
        .parse()
        .map_err(|_| Usage(format!("unknown integral family '{family}'")))?;
    if !(rel_tol.is_finite() && rel_tol > 0.0) {
        return Err(Usage(format!("--rel-tol must be positive, got {rel_tol}")));
    }
    let quadrature = match quad_order {
        Some(order) => QuadratureSpec::gauss_hermite(order)?,
        None => QuadratureSpec::default(),
    };
    let opts = VerifyOptions {
        tolerance: Tolerance::relative(rel_tol),
        quadrature,
        convention: convention.parse()?,
    };
    let axes = parse_axes(&split_pairs(args, formula.parameter_names(), family)?)?;
    let points = cartesian(&axes)
        .iter()
        .map(|values| integral_params(formula, values))
        .collect::<Result<Vec<_>, Usage>>()?;

    let reports = verify_all(formula, &points, &opts)?;
    write_reports(&reports, format, out)?;
    let passed = reports.iter().filter(|r| r.pass).count();
    let failed = reports.len() - passed;
    writeln!(err, "total={} passed={passed} failed={failed}", reports.len())?;
    Ok(if failed == 0 { EXIT_PASS } else { EXIT_FAIL })
}

fn small_integer(key: &str, values: &BTreeMap<&str, f64>, default: Option<u32>) -> Result<u32, Usage> {
    let v = match (values.get(key), default) {
        (Some(&v), _) => v,
        (None, Some(d)) => return Ok(d),
        (None, None) => return Err(Usage(format!("missing parameter '{key}'"))),
    };
    let k = to_index(key, v)?;
    if k > MAX_EXPAND_DEGREE as usize {
        return Err(Usage(format!(
            "{key} = {k} exceeds the limit of {MAX_EXPAND_DEGREE}"
        )));
    }
    Ok(k as u32)
}

fn cmd_umbral_expand(target: Target, args: &[String], out: &mut dyn Write) -> CmdResult {
    let keys: &[&str] = match target {
        Target::Laguerre => &["n"],
        Target::Q | Target::Wright => &["n", "nu"],
    };
    let values = scalar_values(&split_pairs(args, keys, "umbral-expand")?)?;
    let n = small_integer("n", &values, None)?;
    let nu = small_integer("nu", &values, Some(0))?;
    let (expr, explicit) = match target {
        Target::Laguerre => (laguerre_umbral(n), laguerre_explicit(n)),
        Target::Q => (q_umbral(n, nu), q_explicit(n, nu)),
        Target::Wright => (wright_umbral(nu, n), wright_explicit(nu, n)),
    };
    let reduced = vacuum_reduce(&expr)?;
    let certified = reduced == explicit;
    let verdict = if certified {
        "[CERTIFIED]"
    } else {
        "[NOT CERTIFIED]"
    };
    writeln!(out, "{reduced}  {verdict}")?;
    Ok(if certified { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_gf_check(family: &str, args: &[String], out: &mut dyn Write) -> CmdResult {
    let gf: GfFamily = family.parse()?;
    let keys: &[&str] = match gf {
        GfFamily::Hermite => &["N", "t", "x", "y"],
        GfFamily::Q => &["N", "t", "x", "y", "nu"],
    };
    let pairs = split_pairs(args, keys, family)?;
    let mut grid = GfGrid::default();
    let mut terms = None;
    for (key, axis) in parse_axes(&pairs)? {
        match key {
            "N" => {
                let [v] = axis[..] else {
                    return Err(Usage("N takes a single value".into()));
                };
                let k = to_index("N", v)?;
                if k > MAX_GF_TERMS {
                    return Err(Usage(format!("N = {k} exceeds the limit of {MAX_GF_TERMS}")));
                }
                terms = Some(k);
            }
            "t" => grid.t = axis,
            "x" => grid.x = axis,
            "y" => grid.y = axis,
            "nu" => {
                for &v in &axis {
                    to_order("nu", v)?;
                }
                grid.nu = axis;
            }
            _ => unreachable!("keys checked by split_pairs"),
        }
    }
    let terms = terms.ok_or_else(|| Usage("missing parameter 'N'".into()))?;
    let report = gf_check(gf, terms, &grid, GF_TOLERANCE)?;
    writeln!(
        out,
        "family={family} N={terms} points={} max_dev={:.16e} tol={:.1e} {}",
        report.points,
        report.max_dev,
        report.tol,
        if report.pass { "pass" } else { "fail" }
    )?;
    Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
}
