//! Closed form versus quadrature, and generating-function checks.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrals::{self, FormulaId, IntegralParams, PrefactorConvention};
use crate::oracle::{self, OracleResult, QuadratureSpec};
use crate::poly;
use crate::special::wright2;
use crate::sum::CompensatedSum;

/// Pass/fail thresholds for one comparison.
///
/// Relative error is used unless the oracle value or the closed form is
/// below `near_zero` in magnitude, where the absolute error is compared
/// against `abs_tol` instead.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub near_zero: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-11,
            near_zero: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn relative(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    pub fn accepts(&self, closed_form: f64, oracle: f64) -> bool {
        let abs_err = (closed_form - oracle).abs();
        if closed_form.abs().min(oracle.abs()) < self.near_zero {
            abs_err <= self.abs_tol
        } else {
            abs_err <= self.rel_tol * oracle.abs()
        }
    }
}

/// Flat echo of every integral parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamEcho {
    pub m: usize,
    pub n: usize,
    pub mu: f64,
    pub nu: f64,
    pub shift: f64,
    pub a: f64,
    pub b: f64,
    pub f: f64,
    pub g: f64,
    pub u: f64,
    pub v: f64,
    pub y: f64,
    pub z: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl From<&IntegralParams> for ParamEcho {
    fn from(p: &IntegralParams) -> Self {
        Self {
            m: p.m,
            n: p.n,
            mu: p.mu.value(),
            nu: p.nu.value(),
            shift: p.shift,
            a: p.a,
            b: p.b,
            f: p.f,
            g: p.g,
            u: p.u,
            v: p.v,
            y: p.y,
            z: p.z,
            alpha: p.gaussian.alpha(),
            beta: p.gaussian.beta(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub formula_id: FormulaId,
    pub params: ParamEcho,
    pub prefactor_convention: PrefactorConvention,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_err: f64,
    /// `abs_err / |oracle|`; infinite (null in JSON) when the oracle is zero.
    pub rel_err: f64,
    pub oracle_metadata: OracleResult,
    pub cancellation_magnitude: f64,
    pub catastrophic_cancellation: bool,
    pub pass: bool,
}

/// Options shared by every point of a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct VerifyOptions {
    pub tolerance: Tolerance,
    pub quadrature: QuadratureSpec,
    pub convention: PrefactorConvention,
}

pub fn verify(
    formula: FormulaId,
    params: &IntegralParams,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let closed = integrals::evaluate(formula, params, opts.convention)?;
    let oracle = oracle::integrate(formula, params, &opts.quadrature)?;
    let abs_err = (closed.value - oracle.value).abs();
    let rel_err = if oracle.value == 0.0 {
        if abs_err == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        abs_err / oracle.value.abs()
    };
    let pass = oracle.converged && opts.tolerance.accepts(closed.value, oracle.value);
    Ok(VerificationReport {
        formula_id: formula,
        params: ParamEcho::from(params),
        prefactor_convention: opts.convention,
        closed_form: closed.value,
        oracle: oracle.value,
        abs_err,
        rel_err,
        cancellation_magnitude: closed.cancellation_magnitude,
        catastrophic_cancellation: closed.catastrophic_cancellation(),
        oracle_metadata: oracle,
        pass,
    })
}

/// Verifies every point in parallel; reports come back in input order.
pub fn verify_all(
    formula: FormulaId,
    points: &[IntegralParams],
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>> {
    points.par_iter().map(|p| verify(formula, p, opts)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GfFamily {
    /// `sum_n t^n/n! H_n(x, y) = exp(x t + y t^2)`
    Hermite,
    /// `sum_n t^n/n! Q_n^(nu)(x, y) = exp(x t) W_nu(y t^2 | 2)`
    Q,
}

impl std::str::FromStr for GfFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hermite" => Ok(GfFamily::Hermite),
            "q" => Ok(GfFamily::Q),
            other => Err(Error::InvalidRequest(format!(
                "unknown generating-function family '{other}'"
            ))),
        }
    }
}

/// Points at which a generating function is checked. `nu` is ignored by
/// the Hermite family.
#[derive(Debug, Clone, PartialEq)]
pub struct GfGrid {
    pub t: Vec<f64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub nu: Vec<f64>,
}

impl Default for GfGrid {
    fn default() -> Self {
        let lin = |lo: f64, hi: f64, k: usize| -> Vec<f64> {
            (0..k)
                .map(|i| lo + (hi - lo) * i as f64 / (k - 1) as f64)
                .collect()
        };
        Self {
            t: lin(-0.5, 0.5, 11),
            x: lin(-2.0, 2.0, 9),
            y: lin(-2.0, 2.0, 9),
            nu: vec![0.0, 0.5, 1.0, 2.5],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GfReport {
    pub family: GfFamily,
    pub terms: usize,
    pub points: usize,
    pub max_dev: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Largest absolute gap between the series truncated after `t^terms` and
/// the closed generating function, over `grid`.
pub fn gf_check(family: GfFamily, terms: usize, grid: &GfGrid, tol: f64) -> Result<GfReport> {
    let orders: &[f64] = match family {
        GfFamily::Hermite => &[0.0],
        GfFamily::Q => &grid.nu,
    };
    let mut max_dev = 0.0f64;
    let mut points = 0;
    for &nu in orders {
        for &t in &grid.t {
            for &x in &grid.x {
                for &y in &grid.y {
                    let mut series = CompensatedSum::new();
                    let mut t_pow = 1.0;
                    for n in 0..=terms {
                        let p = match family {
                            GfFamily::Hermite => poly::hermite2(n, x, y)?,
                            GfFamily::Q => poly::q_poly(n, nu, x, y)?,
                        };
                        series += t_pow * p;
                        t_pow *= t / (n + 1) as f64;
                    }
                    let closed = match family {
                        GfFamily::Hermite => (x * t + y * t * t).exp(),
                        GfFamily::Q => (x * t).exp() * wright2(nu, y * t * t)?,
                    };
                    max_dev = max_dev.max((series.value() - closed).abs());
                    points += 1;
                }
            }
        }
    }
    Ok(GfReport {
        family,
        terms,
        points,
        max_dev,
        tol,
        pass: max_dev < tol,
    })
}
