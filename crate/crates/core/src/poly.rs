//! Explicit-sum evaluation of the polynomial families.
//!
//! Every family is evaluated straight from its finite sum, ascending in the
//! summation index, with compensated accumulation. Degrees are capped at
//! [`MAX_DEGREE`](crate::error::MAX_DEGREE).

pub mod exact;

use serde::Serialize;

use crate::error::{check_degree, Error, Result};
use crate::special::{binomial, factorial, rgamma_unchecked, OrderParam};
use crate::sum::CompensatedSum;

/// Arguments `(x, y; w, z | tau)` of the two-index families.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct TwoIndexArgs {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub z: f64,
    pub tau: f64,
}

impl TwoIndexArgs {
    pub fn new(x: f64, y: f64, w: f64, z: f64, tau: f64) -> Result<Self> {
        for (name, value) in [("x", x), ("y", y), ("w", w), ("z", z), ("tau", tau)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }
        Ok(Self { x, y, w, z, tau })
    }
}

fn powi(x: f64, k: usize) -> f64 {
    // 0^0 = 1 throughout.
    if k == 0 {
        1.0
    } else {
        x.powi(k as i32)
    }
}

pub(crate) fn hermite2_sum(n: usize, x: f64, y: f64) -> CompensatedSum {
    let nf = factorial(n);
    (0..=n / 2)
        .map(|k| nf / (factorial(n - 2 * k) * factorial(k)) * powi(x, n - 2 * k) * powi(y, k))
        .collect()
}

/// Two-variable Hermite polynomial `H_n(x, y)`, generated by `exp(x t + y t^2)`.
pub fn hermite2(n: usize, x: f64, y: f64) -> Result<f64> {
    check_degree(n)?;
    Ok(hermite2_sum(n, x, y).value())
}

/// Two-variable Laguerre polynomial `L_n(x, y)`; `L_n(x, 1)` is the classical one.
pub fn laguerre2(n: usize, x: f64, y: f64) -> Result<f64> {
    check_degree(n)?;
    let nf = factorial(n);
    let s: CompensatedSum = (0..=n)
        .map(|k| {
            let kf = factorial(k);
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * (nf / (factorial(n - k) * kf)) / kf * powi(x, k) * powi(y, n - k)
        })
        .collect();
    Ok(s.value())
}

/// `Gamma(n + nu + 1) / (n! Gamma(k + nu + 1)) * k!` as a product of `n - k`
/// factors, exactly 1 when `nu = 0`.
fn order_ratio(k: usize, n: usize, nu: f64) -> f64 {
    ((k + 1)..=n).map(|j| (j as f64 + nu) / j as f64).product()
}

/// Associated two-variable Laguerre polynomial `L_n^(nu)(x, y)`.
pub fn laguerre_assoc(n: usize, nu: f64, x: f64, y: f64) -> Result<f64> {
    check_degree(n)?;
    let nu = OrderParam::new(nu)?.value();
    let s: CompensatedSum = (0..=n)
        .map(|k| binomial(n, k) * order_ratio(k, n, nu) / factorial(k) * powi(-x, k) * powi(y, n - k))
        .collect();
    Ok(s.value())
}

pub(crate) fn q_sum(n: usize, nu: f64, x: f64, y: f64) -> CompensatedSum {
    let nf = factorial(n);
    (0..=n / 2)
        .map(|k| {
            nf / (factorial(n - 2 * k) * factorial(k))
                * rgamma_unchecked(2.0 * k as f64 + nu)
                * powi(x, n - 2 * k)
                * powi(y, k)
        })
        .collect()
}

/// Q-polynomial `Q_n^(nu)(x, y) = n! sum_k x^(n-2k) y^k / ((n-2k)! k! Gamma(2k+nu+1))`.
pub fn q_poly(n: usize, nu: f64, x: f64, y: f64) -> Result<f64> {
    check_degree(n)?;
    let nu = OrderParam::new(nu)?.value();
    Ok(q_sum(n, nu, x, y).value())
}

/// Right-hand side of `H_n(x + a, y) = sum_k C(n,k) a^k H_{n-k}(x, y)`.
pub fn hermite2_shift_expand(n: usize, a: f64, x: f64, y: f64) -> Result<f64> {
    check_degree(n)?;
    let s: CompensatedSum = (0..=n)
        .map(|k| binomial(n, k) * powi(a, k) * hermite2_sum(n - k, x, y).value())
        .collect();
    Ok(s.value())
}

/// Coupling coefficient `m! n! / ((m-k)! (n-k)! k!)`.
fn coupling(m: usize, n: usize, k: usize) -> f64 {
    binomial(m, k) * binomial(n, k) * factorial(k)
}

/// Generic two-index sum `sum_k coupling(m,n,k) tau^k left(k) right(k)`.
fn two_index_sum(
    m: usize,
    n: usize,
    tau: f64,
    left: impl Fn(usize) -> f64,
    right: impl Fn(usize) -> f64,
) -> CompensatedSum {
    (0..=m.min(n))
        .map(|k| coupling(m, n, k) * powi(tau, k) * left(k) * right(k))
        .collect()
}

fn hermite_2index_sum(m: usize, n: usize, args: &TwoIndexArgs) -> CompensatedSum {
    two_index_sum(
        m,
        n,
        args.tau,
        |k| hermite2_sum(m - k, args.x, args.y).value(),
        |k| hermite2_sum(n - k, args.w, args.z).value(),
    )
}

/// Two-index Hermite polynomial `H_{m,n}(x, y; w, z | tau)`.
pub fn hermite_2index(m: usize, n: usize, args: &TwoIndexArgs) -> Result<f64> {
    check_degree(m)?;
    check_degree(n)?;
    Ok(hermite_2index_sum(m, n, args).value())
}

pub(crate) fn q_2index_sum(m: usize, n: usize, mu: f64, nu: f64, args: &TwoIndexArgs) -> CompensatedSum {
    // The order inside the sum rises with k: Q_{m-k}^(k+mu), Q_{n-k}^(k+nu).
    two_index_sum(
        m,
        n,
        args.tau,
        |k| q_sum(m - k, k as f64 + mu, args.x, args.y).value(),
        |k| q_sum(n - k, k as f64 + nu, args.w, args.z).value(),
    )
}

/// Two-index Q-polynomial `Q_{m,n}^(mu,nu)(x, y; w, z | tau)`.
pub fn q_2index(m: usize, n: usize, mu: f64, nu: f64, args: &TwoIndexArgs) -> Result<f64> {
    check_degree(m)?;
    check_degree(n)?;
    let mu = OrderParam::new(mu)?.value();
    let nu = OrderParam::new(nu)?.value();
    Ok(q_2index_sum(m, n, mu, nu, args).value())
}

pub(crate) fn t_sum(m: usize, n: usize, nu: f64, args: &TwoIndexArgs) -> CompensatedSum {
    two_index_sum(
        m,
        n,
        args.tau,
        |k| q_sum(m - k, k as f64 + nu, args.x, args.y).value(),
        |k| hermite2_sum(n - k, args.w, args.z).value(),
    )
}

/// Mixed polynomial `T_{m,n}^(nu)(x, y; w, z | tau)` coupling `Q_{m-k}^(k+nu)` with `H_{n-k}`.
pub fn t_poly(m: usize, n: usize, nu: f64, args: &TwoIndexArgs) -> Result<f64> {
    check_degree(m)?;
    check_degree(n)?;
    let nu = OrderParam::new(nu)?.value();
    Ok(t_sum(m, n, nu, args).value())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PolyFamily {
    Hermite2,
    Laguerre2,
    LaguerreAssoc,
    Q,
    Hermite2Index,
    Q2Index,
    T,
}

impl PolyFamily {
    fn is_two_index(self) -> bool {
        matches!(
            self,
            PolyFamily::Hermite2Index | PolyFamily::Q2Index | PolyFamily::T
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolyIndex {
    pub n: usize,
    pub m: Option<usize>,
}

/// A checked evaluation request for one polynomial family.
///
/// Single-index families read `x`, `y` from `args`; two-index families read
/// all five fields. `orders` is `(mu, nu)`; families with a single order use
/// `nu`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolyEval {
    family: PolyFamily,
    index: PolyIndex,
    orders: (OrderParam, OrderParam),
    args: TwoIndexArgs,
}

impl PolyEval {
    pub fn new(
        family: PolyFamily,
        index: PolyIndex,
        orders: (OrderParam, OrderParam),
        args: TwoIndexArgs,
    ) -> Result<Self> {
        if family.is_two_index() != index.m.is_some() {
            return Err(Error::InvalidRequest(format!(
                "{family:?} takes {} index",
                if family.is_two_index() {
                    "two indices (m, n)"
                } else {
                    "a single"
                }
            )));
        }
        check_degree(index.n)?;
        if let Some(m) = index.m {
            check_degree(m)?;
        }
        let uses_mu = family == PolyFamily::Q2Index;
        let uses_nu = matches!(
            family,
            PolyFamily::LaguerreAssoc | PolyFamily::Q | PolyFamily::Q2Index | PolyFamily::T
        );
        if (!uses_mu && orders.0 != OrderParam::ZERO) || (!uses_nu && orders.1 != OrderParam::ZERO) {
            return Err(Error::InvalidRequest(format!(
                "{family:?} does not take the order parameters given"
            )));
        }
        let args = TwoIndexArgs::new(args.x, args.y, args.w, args.z, args.tau)?;
        Ok(Self {
            family,
            index,
            orders,
            args,
        })
    }

    pub fn family(&self) -> PolyFamily {
        self.family
    }

    pub fn evaluate(&self) -> f64 {
        let PolyIndex { n, m } = self.index;
        let m = m.unwrap_or(0);
        let (mu, nu) = (self.orders.0.value(), self.orders.1.value());
        let a = &self.args;
        // Validation happened at construction.
        let value = match self.family {
            PolyFamily::Hermite2 => hermite2(n, a.x, a.y),
            PolyFamily::Laguerre2 => laguerre2(n, a.x, a.y),
            PolyFamily::LaguerreAssoc => laguerre_assoc(n, nu, a.x, a.y),
            PolyFamily::Q => q_poly(n, nu, a.x, a.y),
            PolyFamily::Hermite2Index => hermite_2index(m, n, a),
            PolyFamily::Q2Index => q_2index(m, n, mu, nu, a),
            PolyFamily::T => t_poly(m, n, nu, a),
        };
        value.expect("validated request")
    }
}
