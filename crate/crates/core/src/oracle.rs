//! Quadrature oracle for Gaussian-weighted integrals.
//!
//! Integrands are assembled from the polynomial and special-function
//! evaluators only; no closed form is consulted. The default rule is
//! Gauss-Hermite in the scaled variable `t = sqrt(alpha) x`, with the order
//! doubled until two successive orders agree.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integrals::{FormulaId, IntegralParams};
use crate::poly;
use crate::special::bessel_tricomi0;
use crate::sum::CompensatedSum;

/// Nodes and weights of a quadrature rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }
}

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

/// Orthonormal Hermite recurrence at `z`: returns `(p_n(z), p_n'(z))`.
fn hermite_orthonormal(n: usize, z: f64) -> (f64, f64) {
    let mut p1 = PI.powf(-0.25);
    let mut p2 = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
    }
    (p1, (2.0 * n as f64).sqrt() * p2)
}

/// Golub-Welsch starting points: eigenvalues of the Jacobi matrix of the
/// Hermite weight, each polished by Newton on the recurrence.
fn gauss_hermite_rule(n: usize) -> GaussRule {
    let jacobi = DMatrix::from_fn(n, n, |i, j| {
        if i.abs_diff(j) == 1 {
            (i.max(j) as f64 / 2.0).sqrt()
        } else {
            0.0
        }
    });
    let mut guesses: Vec<f64> = SymmetricEigen::new(jacobi).eigenvalues.iter().copied().collect();
    guesses.sort_by(|a, b| b.total_cmp(a));

    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for (i, guess) in guesses.into_iter().enumerate() {
        if n % 2 == 1 && i == n / 2 {
            nodes.push(0.0);
            let (_, d) = hermite_orthonormal(n, 0.0);
            weights.push(2.0 / (d * d));
            continue;
        }
        let mut z = guess;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, d) = hermite_orthonormal(n, z);
            let step = p / d;
            z -= step;
            if step.abs() <= NEWTON_TOL * z.abs().max(1.0) {
                break;
            }
        }
        let (_, d) = hermite_orthonormal(n, z);
        nodes.push(z);
        weights.push(2.0 / (d * d));
    }
    // Enforce exact symmetry.
    for i in 0..n / 2 {
        let z = 0.5 * (nodes[i] - nodes[n - 1 - i]);
        let w = 0.5 * (weights[i] + weights[n - 1 - i]);
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    GaussRule { nodes, weights }
}

/// Gauss-Hermite rule of order `n` for the weight `exp(-t^2)`, cached.
pub fn gauss_hermite(n: usize) -> Arc<GaussRule> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussRule>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        let table = [32, 64, 128, 256]
            .into_iter()
            .map(|n| (n, Arc::new(gauss_hermite_rule(n))))
            .collect();
        Mutex::new(table)
    });
    let mut guard = cache.lock().expect("rule cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(gauss_hermite_rule(n)))
        .clone()
}

/// Gauss-Legendre rule of order `n` on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> GaussRule {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let legendre = |z: f64| {
            let mut p1 = 1.0;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
            }
            (p1, nf * (z * p1 - p2) / (z * z - 1.0))
        };
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..NEWTON_MAX_ITER {
            let (p, d) = legendre(z);
            let step = p / d;
            z -= step;
            if step.abs() <= NEWTON_TOL {
                break;
            }
        }
        let (_, deriv) = legendre(z);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = 2.0 / ((1.0 - z * z) * deriv * deriv);
        weights[n - 1 - i] = weights[i];
    }
    GaussRule { nodes, weights }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadratureRule {
    /// Gauss-Hermite in `t = sqrt(alpha) x`; the order doubles each round.
    GaussHermite,
    /// Composite 8-point Gauss-Legendre of `f(x) exp(-alpha x^2)` on
    /// `|x| <= truncation_radius / sqrt(alpha)`; the panel count doubles
    /// each round.
    AdaptiveTruncated,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureSpec {
    pub rule: QuadratureRule,
    pub initial_order: usize,
    pub max_order: usize,
    pub rel_tol: f64,
    pub truncation_radius: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rule: QuadratureRule::GaussHermite,
            initial_order: 32,
            max_order: 256,
            rel_tol: 1e-12,
            truncation_radius: 10.0,
        }
    }
}

impl QuadratureSpec {
    pub fn new(
        rule: QuadratureRule,
        initial_order: usize,
        max_order: usize,
        rel_tol: f64,
        truncation_radius: f64,
    ) -> Result<Self> {
        if initial_order == 0 || max_order < initial_order {
            return Err(Error::InvalidRequest(format!(
                "quadrature orders must satisfy 0 < initial ({initial_order}) <= max ({max_order})"
            )));
        }
        if rel_tol.is_nan() || rel_tol < 1e-14 {
            return Err(Error::InvalidRequest(format!(
                "quadrature rel_tol {rel_tol} is below 1e-14"
            )));
        }
        if !(truncation_radius.is_finite() && truncation_radius > 0.0) {
            return Err(Error::InvalidRequest("truncation radius must be positive".into()));
        }
        Ok(Self {
            rule,
            initial_order,
            max_order,
            rel_tol,
            truncation_radius,
        })
    }

    /// Gauss-Hermite capped at `max_order`.
    pub fn gauss_hermite(max_order: usize) -> Result<Self> {
        let initial = max_order.min(32);
        Self::new(QuadratureRule::GaussHermite, initial, max_order, 1e-12, 10.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    /// Difference of the last two orders; an estimate, not a bound.
    pub est_error: f64,
    /// Highest order (or panel count) evaluated.
    pub orders_used: usize,
    pub converged: bool,
    /// `(order, value)` for every round, lowest order first.
    #[serde(skip)]
    pub history: Vec<(usize, f64)>,
}

fn apply_gauss_hermite(f: &dyn Fn(f64) -> f64, alpha: f64, order: usize) -> f64 {
    let rule = gauss_hermite(order);
    let scale = alpha.sqrt();
    let s: CompensatedSum = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(t, w)| w * f(t / scale))
        .collect();
    s.value() / scale
}

fn apply_truncated(f: &dyn Fn(f64) -> f64, alpha: f64, panels: usize, radius: f64) -> f64 {
    static PANEL_RULE: OnceLock<GaussRule> = OnceLock::new();
    let rule = PANEL_RULE.get_or_init(|| gauss_legendre(8));
    let half_width = radius / alpha.sqrt();
    let h = 2.0 * half_width / panels as f64;
    let mut acc = CompensatedSum::new();
    for p in 0..panels {
        let mid = -half_width + (p as f64 + 0.5) * h;
        for (t, w) in rule.nodes.iter().zip(&rule.weights) {
            let x = mid + 0.5 * h * t;
            acc += 0.5 * h * w * f(x) * (-alpha * x * x).exp();
        }
    }
    acc.value()
}

/// `int f(x) exp(-alpha x^2) dx` over the real line.
pub fn integrate_gaussian_weighted(
    integrand: &dyn Fn(f64) -> f64,
    alpha: f64,
    spec: &QuadratureSpec,
) -> Result<OracleResult> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::NonPositiveAlpha(alpha));
    }
    let round = |order: usize| match spec.rule {
        QuadratureRule::GaussHermite => apply_gauss_hermite(integrand, alpha, order),
        QuadratureRule::AdaptiveTruncated => apply_truncated(integrand, alpha, order, spec.truncation_radius),
    };
    let mut order = spec.initial_order;
    let mut value = round(order);
    let mut history = vec![(order, value)];
    let mut est_error = f64::INFINITY;
    let mut converged = false;
    while order * 2 <= spec.max_order {
        order *= 2;
        let next = round(order);
        history.push((order, next));
        est_error = (next - value).abs();
        value = next;
        if est_error <= spec.rel_tol * (1.0 + value.abs()) {
            converged = true;
            break;
        }
    }
    Ok(OracleResult {
        value,
        est_error,
        orders_used: order,
        converged,
        history,
    })
}

pub type Integrand = Box<dyn Fn(f64) -> f64 + Send + Sync>;

fn expect_eval(v: Result<f64>) -> f64 {
    // Parameters were validated before the closure was built.
    v.unwrap_or(f64::NAN)
}

/// Bare integrand of `formula` (without the Gaussian weight).
pub fn integrand_builder(formula: FormulaId, params: &IntegralParams) -> Result<Integrand> {
    params.validate_for(formula)?;
    let p = *params;
    let (mu, nu) = (p.mu.value(), p.nu.value());
    let f: Integrand = match formula {
        FormulaId::MasterGaussian => {
            let beta = p.gaussian.beta();
            Box::new(move |x| {
                let base = p.a * x + p.b;
                let power = if p.n == 0 { 1.0 } else { base.powi(p.n as i32) };
                power * (beta * x).exp()
            })
        }
        FormulaId::LaguerreGaussian => Box::new(move |x| expect_eval(poly::laguerre2(p.n, x, p.u))),
        FormulaId::LaguerreAssocGaussian => {
            Box::new(move |x| expect_eval(poly::laguerre_assoc(p.n, nu, x, p.u)))
        }
        FormulaId::LaguerreShiftedGaussian => {
            Box::new(move |x| expect_eval(poly::laguerre_assoc(p.n, nu, x + p.shift, p.u)))
        }
        FormulaId::LaguerreProductGaussian => Box::new(move |x| {
            expect_eval(poly::laguerre_assoc(p.m, mu, x, p.u))
                * expect_eval(poly::laguerre_assoc(p.n, nu, x, p.v))
        }),
        FormulaId::LaguerreHermiteGaussian => Box::new(move |x| {
            expect_eval(poly::laguerre_assoc(p.m, nu, x, p.y))
                * expect_eval(poly::hermite2(p.n, p.f * x + p.g, p.z))
        }),
        FormulaId::LaguerreBessel => {
            Box::new(move |x| expect_eval(poly::laguerre2(p.n, x, p.y)) * bessel_tricomi0(x))
        }
    };
    Ok(f)
}

/// Quadrature value of `formula` at `params`.
pub fn integrate(formula: FormulaId, params: &IntegralParams, spec: &QuadratureSpec) -> Result<OracleResult> {
    let f = integrand_builder(formula, params)?;
    integrate_gaussian_weighted(&f, params.alpha(), spec)
}
