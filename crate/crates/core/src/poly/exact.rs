//! Exact rational coefficients of the Q-polynomials for integer order.
//!
//! Two independent constructions: the explicit sum, and the operational
//! form `Q_n^(nu)(x, y) = W_nu(y d^2/dx^2 | 2) x^n` evaluated by formally
//! differentiating `x^n`. Keys are `(power of x, power of y)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Coefficients = BTreeMap<(u32, u32), BigRational>;

pub(crate) fn big_factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * j)
}

/// Coefficients of the explicit sum `n! sum_k x^(n-2k) y^k / ((n-2k)! k! (2k+nu)!)`.
pub fn q_coefficients_explicit(n: u32, nu: u32) -> Coefficients {
    let nf = big_factorial(n);
    (0..=n / 2)
        .map(|k| {
            let den = big_factorial(n - 2 * k) * big_factorial(k) * big_factorial(2 * k + nu);
            ((n - 2 * k, k), BigRational::new(nf.clone(), den))
        })
        .collect()
}

/// Dense polynomial in `x`, index = power.
fn differentiate(p: &[BigRational]) -> Vec<BigRational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| c * BigRational::from_integer(BigInt::from(j)))
        .collect()
}

/// Coefficients of `sum_k y^k / (k! (2k+nu)!) d^(2k)/dx^(2k) x^n`.
pub fn q_coefficients_operational(n: u32, nu: u32) -> Coefficients {
    let mut poly: Vec<BigRational> = vec![BigRational::zero(); n as usize + 1];
    poly[n as usize] = BigRational::one();
    let mut out = Coefficients::new();
    let mut k = 0u32;
    while !poly.is_empty() {
        let weight = BigRational::new(BigInt::one(), big_factorial(k) * big_factorial(2 * k + nu));
        for (power, c) in poly.iter().enumerate() {
            if !c.is_zero() {
                let entry = out.entry((power as u32, k)).or_insert_with(BigRational::zero);
                *entry += c * &weight;
            }
        }
        poly = differentiate(&differentiate(&poly));
        k += 1;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_coefficients() {
        let c = q_coefficients_explicit(2, 0);
        assert_eq!(c[&(2, 0)], BigRational::one());
        assert_eq!(c[&(0, 1)], BigRational::one());
        assert_eq!(q_coefficients_operational(2, 0), c);
    }

    #[test]
    fn operational_identity_exact() {
        for n in 0..=12 {
            for nu in 0..=4 {
                assert_eq!(
                    q_coefficients_operational(n, nu),
                    q_coefficients_explicit(n, nu),
                    "n={n} nu={nu}"
                );
            }
        }
    }
}
