//! Exact certificates that the umbral constructions reproduce the explicit sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{
    exp_truncated, expand_binomial_power, hermite_expr, vacuum_reduce, Exponent, ReducedSum, ReducedTerm,
    UmbralExpr, VarPowers,
};
use crate::poly::exact::big_factorial as fact;

fn vars(pairs: &[(&str, u32)]) -> VarPowers {
    pairs
        .iter()
        .filter(|(_, p)| *p > 0)
        .map(|(v, p)| (v.to_string(), *p))
        .collect()
}

fn term(coeff: BigRational, var_powers: VarPowers) -> ReducedTerm {
    ReducedTerm {
        coeff,
        var_powers,
        gamma_args: Vec::new(),
    }
}

/// `L_n(x, y) = n! sum_k (-1)^k x^k y^(n-k) / ((n-k)! (k!)^2)` as exact terms.
pub fn laguerre_explicit(n: u32) -> ReducedSum {
    ReducedSum::from_terms((0..=n).map(|k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = BigRational::new(BigInt::from(sign) * fact(n), fact(n - k) * fact(k) * fact(k));
        term(coeff, vars(&[("x", k), ("y", n - k)]))
    }))
}

/// `Q_n^(nu)(x, y)` for integer `nu` as exact terms.
pub fn q_explicit(n: u32, nu: u32) -> ReducedSum {
    ReducedSum::from_terms((0..=n / 2).map(|k| {
        let coeff = BigRational::new(fact(n), fact(n - 2 * k) * fact(k) * fact(2 * k + nu));
        term(coeff, vars(&[("x", n - 2 * k), ("y", k)]))
    }))
}

/// First `terms + 1` terms of `W_nu(x|2) = sum_k x^k / (k! (2k+nu)!)`.
pub fn wright_explicit(nu: u32, terms: u32) -> ReducedSum {
    ReducedSum::from_terms((0..=terms).map(|k| {
        let coeff = BigRational::new(BigInt::one(), fact(k) * fact(2 * k + nu));
        term(coeff, vars(&[("x", k)]))
    }))
}

fn c(p: i64) -> UmbralExpr {
    UmbralExpr::c_hat(Exponent::from_integer(p))
}

fn d(p: i64) -> UmbralExpr {
    UmbralExpr::d_hat(Exponent::from_integer(p))
}

/// `(y - c x)^n`
pub fn laguerre_umbral(n: u32) -> UmbralExpr {
    expand_binomial_power("y", "x", n)
}

/// `c^nu H_n(x, y c^2)`
pub fn q_umbral(n: u32, nu: u32) -> UmbralExpr {
    let y_c2 = &UmbralExpr::var("y") * &c(2);
    &c(nu as i64) * &hermite_expr(n, &UmbralExpr::var("x"), &y_c2)
}

/// `d^nu sum_{k <= terms} (d^2 x)^k / k!`
pub fn wright_umbral(nu: u32, terms: u32) -> UmbralExpr {
    let arg = &d(2) * &UmbralExpr::var("x");
    &d(nu as i64) * &exp_truncated(&arg, terms)
}

/// The Laguerre construction reduced against the vacuum equals the explicit sum.
pub fn certify_laguerre(n: u32) -> bool {
    matches!(vacuum_reduce(&laguerre_umbral(n)), Ok(r) if r == laguerre_explicit(n))
}

/// The Hermite-based construction of `Q_n^(nu)` reduces to the explicit Q sum.
pub fn certify_q_from_hermite(n: u32, nu: u32) -> bool {
    matches!(vacuum_reduce(&q_umbral(n, nu)), Ok(r) if r == q_explicit(n, nu))
}

/// The truncated `d`-exponential reduces to the leading terms of the
/// Bessel-Wright series.
pub fn certify_wright_reduction(nu: u32, terms: u32) -> bool {
    matches!(vacuum_reduce(&wright_umbral(nu, terms)), Ok(r) if r == wright_explicit(nu, terms))
}

/// Fused double-sum form of the Laguerre-Bessel integral.
///
/// With `s = 1/(2 alpha)` and `r = 1/(4 alpha)` kept formal, checks that
/// `H_n(y + c d s, c^2 r) exp(d^2 r)` (exponential truncated after
/// `wright_terms` terms) reduces to
/// `sum_{k,p} n! y^(n-2k-p) r^k s^p / ((n-2k-p)! p! k! (2k+p)!) * W_p(r|2)`
/// with the same truncation of every `W_p`.
pub fn certify_bessel_fused(n: u32, wright_terms: u32) -> bool {
    let shift = &(&c(1) * &d(1)) * &UmbralExpr::var("s");
    let first = &UmbralExpr::var("y") + &shift;
    let second = &c(2) * &UmbralExpr::var("r");
    let weight = exp_truncated(&(&d(2) * &UmbralExpr::var("r")), wright_terms);
    let lhs = match vacuum_reduce(&(&hermite_expr(n, &first, &second) * &weight)) {
        Ok(r) => r,
        Err(_) => return false,
    };

    let mut rhs = Vec::new();
    for k in 0..=n / 2 {
        for p in 0..=(n - 2 * k) {
            let outer = BigRational::new(fact(n), fact(n - 2 * k - p) * fact(p) * fact(k) * fact(2 * k + p));
            for j in 0..=wright_terms {
                let inner = BigRational::new(BigInt::one(), fact(j) * fact(2 * j + p));
                rhs.push(term(
                    &outer * &inner,
                    vars(&[("y", n - 2 * k - p), ("r", k + j), ("s", p)]),
                ));
            }
        }
    }
    lhs == ReducedSum::from_terms(rhs)
}
