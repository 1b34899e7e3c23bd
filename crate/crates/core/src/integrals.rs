//! Closed forms for Gaussian-weighted integrals of Laguerre polynomials.
//!
//! Each formula is written in terms of the polynomial families of
//! [`crate::poly`]; nothing here integrates numerically. Every evaluator
//! reports how much cancellation its outer sum went through, see
//! [`ClosedFormResult`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{check_degree, Error, Result};
use crate::poly::{self, TwoIndexArgs};
use crate::special::{binomial, factorial, gamma, rgamma_unchecked, wright2, OrderParam};
use crate::sum::CompensatedSum;

/// Cancellation ratio above which a closed-form value is flagged.
pub const CATASTROPHIC_CANCELLATION: f64 = 1e12;

/// Gaussian weight `exp(-alpha x^2 + beta x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianParams {
    alpha: f64,
    beta: f64,
}

impl GaussianParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::NonPositiveAlpha(alpha));
        }
        if !beta.is_finite() {
            return Err(Error::NonFinite {
                name: "beta",
                value: beta,
            });
        }
        Ok(Self { alpha, beta })
    }

    /// Untilted weight `exp(-alpha x^2)`.
    pub fn centered(alpha: f64) -> Result<Self> {
        Self::new(alpha, 0.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    /// `int (a x + b)^n exp(-alpha x^2 + beta x) dx`
    MasterGaussian,
    /// `int L_n(x, u) exp(-alpha x^2) dx`
    LaguerreGaussian,
    /// `int L_n^(nu)(x, u) exp(-alpha x^2) dx`
    LaguerreAssocGaussian,
    /// `int L_n^(nu)(x + shift, u) exp(-alpha x^2) dx`
    LaguerreShiftedGaussian,
    /// `int L_m^(mu)(x, u) L_n^(nu)(x, v) exp(-alpha x^2) dx`
    LaguerreProductGaussian,
    /// `int L_m^(nu)(x, y) H_n(f x + g, z) exp(-alpha x^2) dx`
    LaguerreHermiteGaussian,
    /// `int L_n(x, y) J0(2 sqrt(x)) exp(-alpha x^2) dx`
    LaguerreBessel,
}

impl FormulaId {
    pub const ALL: [FormulaId; 7] = [
        FormulaId::MasterGaussian,
        FormulaId::LaguerreGaussian,
        FormulaId::LaguerreAssocGaussian,
        FormulaId::LaguerreShiftedGaussian,
        FormulaId::LaguerreProductGaussian,
        FormulaId::LaguerreHermiteGaussian,
        FormulaId::LaguerreBessel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::MasterGaussian => "master-gaussian",
            FormulaId::LaguerreGaussian => "laguerre-gaussian",
            FormulaId::LaguerreAssocGaussian => "laguerre-assoc-gaussian",
            FormulaId::LaguerreShiftedGaussian => "laguerre-shifted-gaussian",
            FormulaId::LaguerreProductGaussian => "laguerre-product-gaussian",
            FormulaId::LaguerreHermiteGaussian => "laguerre-hermite-gaussian",
            FormulaId::LaguerreBessel => "laguerre-bessel",
        }
    }

    /// Names of the [`IntegralParams`] fields this formula reads, with
    /// `alpha` and `beta` standing for the Gaussian parameters.
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            FormulaId::MasterGaussian => &["n", "a", "b", "alpha", "beta"],
            FormulaId::LaguerreGaussian => &["n", "u", "alpha"],
            FormulaId::LaguerreAssocGaussian => &["n", "nu", "u", "alpha"],
            FormulaId::LaguerreShiftedGaussian => &["n", "nu", "shift", "u", "alpha"],
            FormulaId::LaguerreProductGaussian => &["m", "n", "mu", "nu", "u", "v", "alpha"],
            FormulaId::LaguerreHermiteGaussian => &["m", "n", "nu", "y", "f", "g", "z", "alpha"],
            FormulaId::LaguerreBessel => &["n", "y", "alpha"],
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.strip_suffix("-gaussian").unwrap_or(s);
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name().strip_suffix("-gaussian").unwrap_or(f.name()) == s)
            .ok_or_else(|| Error::InvalidRequest(format!("unknown integral family '{s}'")))
    }
}

/// Which Laguerre index carries the `Gamma(k + nu + 1)/k!` prefactor in the
/// Laguerre-Hermite integral.
///
/// `M` ties it to the Laguerre degree `m`, which is what the umbral
/// derivation produces; `N` ties it to the Hermite degree `n`. The
/// acceptance suite checks both against quadrature and only `M` survives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrefactorConvention {
    #[default]
    M,
    N,
}

impl FromStr for PrefactorConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(PrefactorConvention::M),
            "n" => Ok(PrefactorConvention::N),
            other => Err(Error::InvalidRequest(format!(
                "prefactor convention must be 'm' or 'n', got '{other}'"
            ))),
        }
    }
}

/// Full parameter set of any integral family; each family reads its subset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegralParams {
    pub m: usize,
    pub n: usize,
    pub mu: OrderParam,
    pub nu: OrderParam,
    pub shift: f64,
    /// Line coefficients of the master integral, `(a x + b)^n`.
    pub a: f64,
    pub b: f64,
    /// Argument `f x + g` of the Hermite factor.
    pub f: f64,
    pub g: f64,
    pub u: f64,
    pub v: f64,
    pub y: f64,
    pub z: f64,
    pub gaussian: GaussianParams,
}

impl Default for IntegralParams {
    fn default() -> Self {
        Self {
            m: 0,
            n: 0,
            mu: OrderParam::ZERO,
            nu: OrderParam::ZERO,
            shift: 0.0,
            a: 1.0,
            b: 0.0,
            f: 1.0,
            g: 0.0,
            u: 1.0,
            v: 1.0,
            y: 1.0,
            z: 0.0,
            gaussian: GaussianParams {
                alpha: 1.0,
                beta: 0.0,
            },
        }
    }
}

impl IntegralParams {
    pub fn alpha(&self) -> f64 {
        self.gaussian.alpha
    }

    /// Checks the subset of parameters `formula` reads.
    pub fn validate_for(&self, formula: FormulaId) -> Result<()> {
        check_degree(self.n)?;
        check_degree(self.m)?;
        let reals = [
            ("shift", self.shift),
            ("a", self.a),
            ("b", self.b),
            ("f", self.f),
            ("g", self.g),
            ("u", self.u),
            ("v", self.v),
            ("y", self.y),
            ("z", self.z),
        ];
        if let Some(&(name, value)) = reals.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite { name, value });
        }
        if formula != FormulaId::MasterGaussian && self.gaussian.beta != 0.0 {
            return Err(Error::InvalidRequest(format!(
                "{formula} has no linear tilt; beta must be 0"
            )));
        }
        Ok(())
    }
}

/// Closed-form value with accuracy diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormResult {
    pub value: f64,
    pub formula_id: FormulaId,
    pub term_count: usize,
    /// Largest outer-sum term over the result, `>= 1`.
    pub cancellation_magnitude: f64,
}

impl ClosedFormResult {
    fn from_sum(formula_id: FormulaId, scale: f64, sum: &CompensatedSum) -> Self {
        Self {
            value: scale * sum.value(),
            formula_id,
            term_count: sum.term_count(),
            cancellation_magnitude: sum.cancellation(),
        }
    }

    pub fn catastrophic_cancellation(&self) -> bool {
        self.cancellation_magnitude > CATASTROPHIC_CANCELLATION
    }
}

fn gaussian_norm(alpha: f64) -> f64 {
    (PI / alpha).sqrt()
}

/// `Gamma(n + nu + 1) / n!`
fn laguerre_prefactor(n: usize, nu: f64) -> f64 {
    let ratio: f64 = (1..=n).map(|j| (j as f64 + nu) / j as f64).product();
    gamma(nu + 1.0) * ratio
}

fn master_detail(n: usize, a: f64, b: f64, gp: GaussianParams) -> ClosedFormResult {
    let (alpha, beta) = (gp.alpha, gp.beta);
    let x = b + a * beta / (2.0 * alpha);
    let y = a * a / (4.0 * alpha);
    let scale = gaussian_norm(alpha) * (beta * beta / (4.0 * alpha)).exp();
    let sum = poly::hermite2_sum(n, x, y);
    ClosedFormResult::from_sum(FormulaId::MasterGaussian, scale, &sum)
}

/// `int (a x + b)^n exp(-alpha x^2 + beta x) dx
///   = sqrt(pi/alpha) exp(beta^2/(4 alpha)) H_n(b + a beta/(2 alpha), a^2/(4 alpha))`
pub fn master_gaussian(n: usize, a: f64, b: f64, gp: GaussianParams) -> Result<f64> {
    check_degree(n)?;
    Ok(master_detail(n, a, b, gp).value)
}

fn assoc_detail(n: usize, nu: f64, u: f64, alpha: f64) -> ClosedFormResult {
    let sum = poly::q_sum(n, nu, u, 1.0 / (4.0 * alpha));
    let scale = gaussian_norm(alpha) * laguerre_prefactor(n, nu);
    let id = if nu == 0.0 {
        FormulaId::LaguerreGaussian
    } else {
        FormulaId::LaguerreAssocGaussian
    };
    ClosedFormResult::from_sum(id, scale, &sum)
}

/// `int L_n(x, u) exp(-alpha x^2) dx = sqrt(pi/alpha) Q_n^(0)(u, 1/(4 alpha))`
pub fn laguerre_gaussian(n: usize, u: f64, alpha: f64) -> Result<f64> {
    check_degree(n)?;
    GaussianParams::centered(alpha)?;
    Ok(assoc_detail(n, 0.0, u, alpha).value)
}

/// `int L_n^(nu)(x, u) exp(-alpha x^2) dx
///   = sqrt(pi/alpha) Gamma(n+nu+1)/n! Q_n^(nu)(u, 1/(4 alpha))`
pub fn laguerre_assoc_gaussian(n: usize, nu: f64, u: f64, alpha: f64) -> Result<f64> {
    check_degree(n)?;
    let nu = OrderParam::new(nu)?.value();
    GaussianParams::centered(alpha)?;
    Ok(assoc_detail(n, nu, u, alpha).value)
}

fn shifted_detail(n: usize, nu: f64, shift: f64, u: f64, alpha: f64) -> ClosedFormResult {
    let y = 1.0 / (4.0 * alpha);
    let sum: CompensatedSum = (0..=n)
        .map(|k| {
            let sign_pow = if k == 0 { 1.0 } else { (-shift).powi(k as i32) };
            binomial(n, k) * sign_pow * poly::q_sum(n - k, k as f64 + nu, u, y).value()
        })
        .collect();
    let scale = gaussian_norm(alpha) * laguerre_prefactor(n, nu);
    ClosedFormResult::from_sum(FormulaId::LaguerreShiftedGaussian, scale, &sum)
}

/// `int L_n^(nu)(x + shift, u) exp(-alpha x^2) dx
///   = sqrt(pi/alpha) Gamma(n+nu+1)/n! sum_k C(n,k) (-shift)^k Q_{n-k}^(k+nu)(u, 1/(4 alpha))`
pub fn laguerre_shifted_gaussian(n: usize, nu: f64, shift: f64, u: f64, alpha: f64) -> Result<f64> {
    check_degree(n)?;
    let nu = OrderParam::new(nu)?.value();
    GaussianParams::centered(alpha)?;
    Ok(shifted_detail(n, nu, shift, u, alpha).value)
}

fn product_detail(m: usize, n: usize, mu: f64, nu: f64, u: f64, v: f64, alpha: f64) -> ClosedFormResult {
    let y = 1.0 / (4.0 * alpha);
    let args = TwoIndexArgs {
        x: u,
        y,
        w: v,
        z: y,
        tau: 1.0 / (2.0 * alpha),
    };
    let sum = poly::q_2index_sum(m, n, mu, nu, &args);
    let scale = gaussian_norm(alpha) * laguerre_prefactor(m, mu) * laguerre_prefactor(n, nu);
    ClosedFormResult::from_sum(FormulaId::LaguerreProductGaussian, scale, &sum)
}

/// `int L_m^(mu)(x, u) L_n^(nu)(x, v) exp(-alpha x^2) dx
///   = sqrt(pi/alpha) Gamma(m+mu+1)/m! Gamma(n+nu+1)/n!
///     Q_{m,n}^(mu,nu)(u, 1/(4 alpha); v, 1/(4 alpha) | 1/(2 alpha))`
pub fn laguerre_product_gaussian(
    m: usize,
    n: usize,
    mu: f64,
    nu: f64,
    u: f64,
    v: f64,
    alpha: f64,
) -> Result<f64> {
    check_degree(m)?;
    check_degree(n)?;
    let mu = OrderParam::new(mu)?.value();
    let nu = OrderParam::new(nu)?.value();
    GaussianParams::centered(alpha)?;
    Ok(product_detail(m, n, mu, nu, u, v, alpha).value)
}

#[allow(clippy::too_many_arguments)]
fn hermite_detail(
    m: usize,
    n: usize,
    nu: f64,
    y: f64,
    f: f64,
    g: f64,
    z: f64,
    alpha: f64,
    convention: PrefactorConvention,
) -> ClosedFormResult {
    let args = TwoIndexArgs {
        x: y,
        y: 1.0 / (4.0 * alpha),
        w: g,
        z: z + f * f / (4.0 * alpha),
        tau: -f / (2.0 * alpha),
    };
    let sum = poly::t_sum(m, n, nu, &args);
    let prefactor = match convention {
        PrefactorConvention::M => laguerre_prefactor(m, nu),
        PrefactorConvention::N => laguerre_prefactor(n, nu),
    };
    ClosedFormResult::from_sum(
        FormulaId::LaguerreHermiteGaussian,
        gaussian_norm(alpha) * prefactor,
        &sum,
    )
}

/// `int L_m^(nu)(x, y) H_n(f x + g, z) exp(-alpha x^2) dx
///   = sqrt(pi/alpha) P T_{m,n}^(nu)(y, 1/(4 alpha); g, z + f^2/(4 alpha) | -f/(2 alpha))`
///
/// with `P = Gamma(m+nu+1)/m!` under [`PrefactorConvention::M`] and
/// `Gamma(n+nu+1)/n!` under [`PrefactorConvention::N`].
#[allow(clippy::too_many_arguments)]
pub fn laguerre_hermite_gaussian(
    m: usize,
    n: usize,
    nu: f64,
    y: f64,
    f: f64,
    g: f64,
    z: f64,
    alpha: f64,
    convention: PrefactorConvention,
) -> Result<f64> {
    check_degree(m)?;
    check_degree(n)?;
    let nu = OrderParam::new(nu)?.value();
    GaussianParams::centered(alpha)?;
    Ok(hermite_detail(m, n, nu, y, f, g, z, alpha, convention).value)
}

fn bessel_detail(n: usize, y: f64, alpha: f64) -> ClosedFormResult {
    // W_p(1/(4 alpha) | 2) for every p that can occur.
    let w: Vec<f64> = (0..=n)
        .map(|p| wright2(p as f64, 1.0 / (4.0 * alpha)).expect("p >= 0"))
        .collect();
    let nf = factorial(n);
    let mut sum = CompensatedSum::new();
    for k in 0..=n / 2 {
        for (p, wp) in w.iter().enumerate().take(n - 2 * k + 1) {
            let power = n - 2 * k - p;
            let y_pow = if power == 0 { 1.0 } else { y.powi(power as i32) };
            let coeff = nf / (factorial(power) * factorial(p) * factorial(k));
            sum += coeff
                * y_pow
                * (4.0 * alpha).powi(-(k as i32))
                * (2.0 * alpha).powi(-(p as i32))
                * rgamma_unchecked((2 * k + p) as f64)
                * wp;
        }
    }
    ClosedFormResult::from_sum(FormulaId::LaguerreBessel, gaussian_norm(alpha), &sum)
}

/// `int L_n(x, y) J0(2 sqrt(x)) exp(-alpha x^2) dx`, with `J0(2 sqrt(x))`
/// continued to `x < 0` as the Bessel-Tricomi function.
///
/// Evaluated as the fused double sum
/// `sqrt(pi/alpha) sum_{k,p} n! y^(n-2k-p) (4 alpha)^-k (2 alpha)^-p
///   / ((n-2k-p)! p! k! (2k+p)!) W_p(1/(4 alpha) | 2)`,
/// which stays regular at `y = 0`.
pub fn laguerre_bessel_gaussian(n: usize, y: f64, alpha: f64) -> Result<f64> {
    check_degree(n)?;
    GaussianParams::centered(alpha)?;
    Ok(bessel_detail(n, y, alpha).value)
}

/// Evaluates `formula` at `params`.
pub fn evaluate(
    formula: FormulaId,
    params: &IntegralParams,
    convention: PrefactorConvention,
) -> Result<ClosedFormResult> {
    params.validate_for(formula)?;
    let p = params;
    let alpha = p.alpha();
    let mut result = match formula {
        FormulaId::MasterGaussian => master_detail(p.n, p.a, p.b, p.gaussian),
        FormulaId::LaguerreGaussian => assoc_detail(p.n, 0.0, p.u, alpha),
        FormulaId::LaguerreAssocGaussian => assoc_detail(p.n, p.nu.value(), p.u, alpha),
        FormulaId::LaguerreShiftedGaussian => shifted_detail(p.n, p.nu.value(), p.shift, p.u, alpha),
        FormulaId::LaguerreProductGaussian => {
            product_detail(p.m, p.n, p.mu.value(), p.nu.value(), p.u, p.v, alpha)
        }
        FormulaId::LaguerreHermiteGaussian => {
            hermite_detail(p.m, p.n, p.nu.value(), p.y, p.f, p.g, p.z, alpha, convention)
        }
        FormulaId::LaguerreBessel => bessel_detail(p.n, p.y, alpha),
    };
    result.formula_id = formula;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_PI: f64 = 1.772_453_850_905_516;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    fn g(alpha: f64) -> GaussianParams {
        GaussianParams::centered(alpha).unwrap()
    }

    #[test]
    fn master_examples() {
        for alpha in [0.5, 1.0, 2.0] {
            assert!(close(
                master_gaussian(0, 1.0, 0.0, g(alpha)).unwrap(),
                (PI / alpha).sqrt(),
                1e-15
            ));
        }
        assert_eq!(master_gaussian(1, 1.0, 0.0, g(1.0)).unwrap(), 0.0);
        assert!(close(
            master_gaussian(2, 1.0, 0.0, g(1.0)).unwrap(),
            SQRT_PI / 2.0,
            1e-15
        ));
        assert!(matches!(
            GaussianParams::new(0.0, 0.0),
            Err(Error::NonPositiveAlpha(_))
        ));
        assert!(GaussianParams::new(-1.0, 0.0).is_err());
    }

    #[test]
    fn single_laguerre_examples() {
        assert!(close(
            laguerre_gaussian(0, 2.5, 2.0).unwrap(),
            (PI / 2.0).sqrt(),
            1e-15
        ));
        assert!(close(
            laguerre_gaussian(1, 2.5, 2.0).unwrap(),
            (PI / 2.0).sqrt() * 2.5,
            1e-15
        ));
        assert!(close(
            laguerre_gaussian(2, 1.0, 1.0).unwrap(),
            1.25 * SQRT_PI,
            1e-15
        ));
        assert!(laguerre_gaussian(2, 1.0, 0.0).is_err());

        assert_eq!(
            laguerre_assoc_gaussian(3, 0.0, 1.5, 0.5).unwrap(),
            laguerre_gaussian(3, 1.5, 0.5).unwrap()
        );
        assert!(close(
            laguerre_assoc_gaussian(0, 1.0, 1.5, 0.5).unwrap(),
            (2.0 * PI).sqrt(),
            1e-15
        ));
        assert!(close(
            laguerre_assoc_gaussian(1, 1.0, 1.0, 1.0).unwrap(),
            2.0 * SQRT_PI,
            1e-15
        ));
        assert!(laguerre_assoc_gaussian(1, -1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(
            laguerre_shifted_gaussian(4, 0.5, 0.0, 1.0, 2.0).unwrap(),
            laguerre_assoc_gaussian(4, 0.5, 1.0, 2.0).unwrap()
        );
        assert!(close(
            laguerre_shifted_gaussian(0, 2.5, 1.0, 3.0, 0.5).unwrap(),
            (2.0 * PI).sqrt(),
            1e-15
        ));
        assert!(laguerre_shifted_gaussian(1, 0.0, 1.0, 1.0, 1.0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn product_examples() {
        assert!(close(
            laguerre_product_gaussian(0, 3, 0.0, 1.0, 2.0, 0.5, 1.0).unwrap(),
            laguerre_assoc_gaussian(3, 1.0, 0.5, 1.0).unwrap(),
            1e-14
        ));
        assert!(close(
            laguerre_product_gaussian(0, 0, 0.0, 0.0, 2.0, 3.0, 2.0).unwrap(),
            (PI / 2.0).sqrt(),
            1e-15
        ));
        assert!(close(
            laguerre_product_gaussian(1, 1, 0.0, 0.0, 1.0, 1.0, 1.0).unwrap(),
            1.5 * SQRT_PI,
            1e-15
        ));
    }

    #[test]
    fn hermite_examples() {
        let conv = PrefactorConvention::M;
        // m = 0: the master integral of H_n(f x + g, z).
        let lh = laguerre_hermite_gaussian(0, 3, 0.0, 1.0, 1.0, 0.5, 0.25, 1.0, conv).unwrap();
        let want = (PI).sqrt() * poly::hermite2(3, 0.5, 0.25 + 0.25).unwrap();
        assert!(close(lh, want, 1e-14));
        // n = 0: the single Laguerre integral.
        let lh0 = laguerre_hermite_gaussian(3, 0, 0.0, 1.5, 1.0, 0.0, 0.0, 0.5, conv).unwrap();
        assert!(close(lh0, laguerre_gaussian(3, 1.5, 0.5).unwrap(), 1e-14));
        let v = laguerre_hermite_gaussian(1, 1, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, conv).unwrap();
        assert!(close(v, -SQRT_PI / 2.0, 1e-15));
    }

    #[test]
    fn conventions_agree_when_degrees_match_or_nu_vanishes() {
        for (m, n, nu) in [(2, 2, 1.5), (1, 4, 0.0)] {
            let a =
                laguerre_hermite_gaussian(m, n, nu, 1.0, 0.5, 1.0, 0.0, 1.0, PrefactorConvention::M).unwrap();
            let b =
                laguerre_hermite_gaussian(m, n, nu, 1.0, 0.5, 1.0, 0.0, 1.0, PrefactorConvention::N).unwrap();
            assert!(close(a, b, 1e-15));
        }
        let a =
            laguerre_hermite_gaussian(1, 3, 1.0, 1.0, 0.5, 1.0, 0.0, 1.0, PrefactorConvention::M).unwrap();
        let b =
            laguerre_hermite_gaussian(1, 3, 1.0, 1.0, 0.5, 1.0, 0.0, 1.0, PrefactorConvention::N).unwrap();
        assert!(!close(a, b, 1e-6));
    }

    #[test]
    fn bessel_examples() {
        let w0 = wright2(0.0, 0.25).unwrap();
        assert!(close(
            laguerre_bessel_gaussian(0, 0.7, 1.0).unwrap(),
            SQRT_PI * w0,
            1e-15
        ));
        let w1 = wright2(1.0, 0.25).unwrap();
        assert!(close(
            laguerre_bessel_gaussian(1, 0.0, 1.0).unwrap(),
            SQRT_PI / 2.0 * w1,
            1e-15
        ));
        assert!(laguerre_bessel_gaussian(1, 0.0, -1.0).is_err());
    }

    #[test]
    fn formula_names_round_trip() {
        for f in FormulaId::ALL {
            assert_eq!(f.name().parse::<FormulaId>().unwrap(), f);
        }
        assert_eq!(
            "laguerre-product".parse::<FormulaId>().unwrap(),
            FormulaId::LaguerreProductGaussian
        );
        assert_eq!(
            "laguerre-bessel-gaussian".parse::<FormulaId>().unwrap(),
            FormulaId::LaguerreBessel
        );
        assert!("bogus".parse::<FormulaId>().is_err());
    }

    #[test]
    fn evaluate_rejects_tilt_outside_master() {
        let p = IntegralParams {
            gaussian: GaussianParams::new(1.0, 1.0).unwrap(),
            ..Default::default()
        };
        assert!(evaluate(FormulaId::LaguerreGaussian, &p, PrefactorConvention::M).is_err());
        assert!(evaluate(FormulaId::MasterGaussian, &p, PrefactorConvention::M).is_ok());
        let big = IntegralParams {
            n: 61,
            ..Default::default()
        };
        assert!(matches!(
            evaluate(FormulaId::LaguerreBessel, &big, PrefactorConvention::M),
            Err(Error::IndexCap(61))
        ));
    }

    #[test]
    fn diagnostics_are_reported() {
        let p = IntegralParams {
            n: 6,
            nu: OrderParam::new(0.5).unwrap(),
            shift: 1.0,
            u: 3.0,
            ..Default::default()
        };
        let r = evaluate(FormulaId::LaguerreShiftedGaussian, &p, PrefactorConvention::M).unwrap();
        assert_eq!(r.term_count, 7);
        assert!(r.cancellation_magnitude >= 1.0);
        assert!(!r.catastrophic_cancellation());
    }
}
