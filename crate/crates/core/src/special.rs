//! Scalar special functions shared by the polynomial, integral and
//! quadrature layers.
//!
//! Gamma values come from a factorial table at integer arguments and from a
//! Lanczos approximation elsewhere. The two entire series used by the
//! integrals, the second-order Bessel-Wright function and the Bessel-Tricomi
//! function `C0(x) = J0(2 sqrt(x))`, are summed in ascending order with
//! compensated accumulation.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

/// Largest integer whose factorial is finite in `f64`.
pub const MAX_FACTORIAL: usize = 170;

const SERIES_REL_EPS: f64 = 1e-17;
const SERIES_MAX_TERMS: usize = 10_000;

// Lanczos approximation, g = 671/128, 14 coefficients.
const LANCZOS_G: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 14] = [
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_76e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_64e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// Associated-Laguerre order parameter, `nu > -1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, serde::Serialize)]
#[serde(transparent)]
pub struct OrderParam(f64);

impl OrderParam {
    pub const ZERO: OrderParam = OrderParam(0.0);

    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() && nu > -1.0 {
            Ok(OrderParam(nu))
        } else {
            Err(Error::OrderDomain(nu))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for OrderParam {
    type Error = Error;

    fn try_from(nu: f64) -> Result<Self> {
        OrderParam::new(nu)
    }
}

impl Default for OrderParam {
    fn default() -> Self {
        OrderParam::ZERO
    }
}

fn factorial_table() -> &'static [f64; MAX_FACTORIAL + 1] {
    static TABLE: OnceLock<[f64; MAX_FACTORIAL + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [1.0; MAX_FACTORIAL + 1];
        let mut exact = BigUint::one();
        for (k, slot) in table.iter_mut().enumerate().skip(1) {
            exact *= k;
            *slot = exact.to_f64().unwrap_or(f64::INFINITY);
        }
        table
    })
}

/// `k!` as the correctly rounded double; infinite above 170.
pub fn factorial(k: usize) -> f64 {
    factorial_table().get(k).copied().unwrap_or(f64::INFINITY)
}

/// `n choose k` in floating point.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc.round()
}

fn lanczos_series(z: f64) -> f64 {
    let mut ser = LANCZOS_C0;
    let mut y = z;
    for c in LANCZOS_COEF {
        y += 1.0;
        ser += c / y;
    }
    ser
}

fn as_small_integer(z: f64) -> Option<usize> {
    if z.fract() == 0.0 && (0.0..=MAX_FACTORIAL as f64).contains(&z) {
        Some(z as usize)
    } else {
        None
    }
}

/// Gamma function for `z > 0`.
pub fn gamma(z: f64) -> f64 {
    if let Some(k) = as_small_integer(z - 1.0) {
        return factorial(k);
    }
    if z < 0.5 {
        return PI / ((PI * z).sin() * gamma(1.0 - z));
    }
    if z > 171.7 {
        return f64::INFINITY;
    }
    // Split the power so t^(z + 1/2) does not overflow near z = 171.
    let t = z + LANCZOS_G;
    let half = t.powf(0.5 * (z + 0.5));
    half * (half * (-t).exp()) * SQRT_2PI * lanczos_series(z) / z
}

/// Natural log of `|Gamma(z)|` for `z > 0`.
pub fn ln_gamma(z: f64) -> f64 {
    if let Some(k) = as_small_integer(z - 1.0) {
        return factorial(k).ln();
    }
    if z < 0.5 {
        return (PI / (PI * z).sin().abs()).ln() - ln_gamma(1.0 - z);
    }
    let t = z + LANCZOS_G;
    (z + 0.5) * t.ln() - t + (SQRT_2PI * lanczos_series(z) / z).ln()
}

/// `1 / Gamma(g + 1)` for `g > -1`.
///
/// Integer `g <= 170` reads the factorial table, so `reciprocal_gamma(k)`
/// is the rounded value of `1/k!`.
pub fn reciprocal_gamma(g: f64) -> Result<f64> {
    if g.is_nan() || g <= -1.0 {
        return Err(Error::GammaDomain(g));
    }
    Ok(rgamma_unchecked(g))
}

pub(crate) fn rgamma_unchecked(g: f64) -> f64 {
    if let Some(k) = as_small_integer(g) {
        return 1.0 / factorial(k);
    }
    let z = g + 1.0;
    if z > 171.0 {
        (-ln_gamma(z)).exp()
    } else {
        1.0 / gamma(z)
    }
}

/// Sums `sum_k term_k` where `term_{k+1} = term_k * ratio(k)`, stopping once
/// two consecutive terms fall below `1e-17` of the running sum.
fn ratio_series(first: f64, ratio: impl Fn(usize) -> f64) -> f64 {
    let mut acc = CompensatedSum::new();
    let mut term = first;
    let mut small_run = 0;
    for k in 0..SERIES_MAX_TERMS {
        acc += term;
        let s = acc.value().abs();
        if term.abs() <= SERIES_REL_EPS * s || term == 0.0 {
            small_run += 1;
            if small_run == 2 {
                break;
            }
        } else {
            small_run = 0;
        }
        term *= ratio(k);
    }
    acc.value()
}

/// Second-order Bessel-Wright function `W_nu(x|2) = sum_k x^k / (k! Gamma(2k + nu + 1))`.
pub fn wright2(nu: f64, x: f64) -> Result<f64> {
    let nu = OrderParam::new(nu)?.value();
    if !x.is_finite() {
        return Err(Error::NonFinite { name: "x", value: x });
    }
    let first = rgamma_unchecked(nu);
    Ok(ratio_series(first, |k| {
        let k = k as f64;
        x / ((k + 1.0) * (2.0 * k + nu + 1.0) * (2.0 * k + nu + 2.0))
    }))
}

/// Bessel-Tricomi function `C0(x) = sum_k (-x)^k / (k!)^2`.
///
/// Equals `J0(2 sqrt(x))` for `x >= 0` and `I0(2 sqrt(-x))` for `x < 0`.
pub fn bessel_tricomi0(x: f64) -> f64 {
    ratio_series(1.0, |k| {
        let k1 = (k + 1) as f64;
        -x / (k1 * k1)
    })
}

/// Classical associated Laguerre polynomial `L_n^(nu)(x)` by the upward
/// three-term recurrence.
pub fn classical_laguerre(n: usize, nu: f64, x: f64) -> Result<f64> {
    let nu = OrderParam::new(nu)?.value();
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 1.0 + nu - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + nu - x) * cur - (k + nu) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
