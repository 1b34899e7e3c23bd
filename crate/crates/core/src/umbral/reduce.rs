use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{fmt_exponent, fmt_rational, Exponent, UmbralExpr, VarPowers};
use crate::error::{Error, Result};
use crate::poly::exact::big_factorial;

/// One term of a vacuum-reduced sum: `coeff * vars * prod_j 1/Gamma(g_j + 1)`.
///
/// Integer `g` never appears in `gamma_args`; those factors are folded into
/// `coeff` as `1/g!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedTerm {
    pub coeff: BigRational,
    pub var_powers: VarPowers,
    pub gamma_args: Vec<Exponent>,
}

/// Post-vacuum value of an umbral expression, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReducedSum {
    terms: Vec<ReducedTerm>,
}

impl ReducedSum {
    pub fn from_terms(terms: impl IntoIterator<Item = ReducedTerm>) -> Self {
        let mut merged: BTreeMap<(VarPowers, Vec<Exponent>), BigRational> = BTreeMap::new();
        for mut t in terms {
            t.gamma_args.sort();
            t.var_powers.retain(|_, p| *p > 0);
            *merged
                .entry((t.var_powers, t.gamma_args))
                .or_insert_with(BigRational::zero) += t.coeff;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((var_powers, gamma_args), coeff)| ReducedTerm {
                coeff,
                var_powers,
                gamma_args,
            })
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> &[ReducedTerm] {
        &self.terms
    }

    /// Numerical value with the formal variables bound to `values`
    /// (unbound variables count as zero).
    pub fn evaluate(&self, values: &BTreeMap<&str, f64>) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let mut v = t.coeff.to_f64().unwrap_or(f64::NAN);
                for (name, p) in &t.var_powers {
                    v *= values.get(name.as_str()).copied().unwrap_or(0.0).powi(*p as i32);
                }
                for g in &t.gamma_args {
                    v *= crate::special::rgamma_unchecked(*g.numer() as f64 / *g.denom() as f64);
                }
                v
            })
            .collect::<crate::sum::CompensatedSum>()
            .value()
    }

    /// Terms in display order: ascending exponent vectors over the
    /// alphabetically ordered variables, then by Gamma arguments.
    fn display_order(&self) -> Vec<&ReducedTerm> {
        let names: Vec<&String> = {
            let mut all: Vec<&String> = self.terms.iter().flat_map(|t| t.var_powers.keys()).collect();
            all.sort();
            all.dedup();
            all
        };
        let mut ordered: Vec<&ReducedTerm> = self.terms.iter().collect();
        ordered.sort_by_cached_key(|t| {
            let exps: Vec<u32> = names
                .iter()
                .map(|n| t.var_powers.get(*n).copied().unwrap_or(0))
                .collect();
            (exps, t.gamma_args.clone())
        });
        ordered
    }
}

pub(crate) fn var_factors(vars: &VarPowers) -> Vec<String> {
    vars.iter()
        .filter(|(_, p)| **p > 0)
        .map(|(v, p)| if *p == 1 { v.clone() } else { format!("{v}^{p}") })
        .collect()
}

impl fmt::Display for ReducedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.display_order().into_iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = t.coeff.abs();
            let vars = var_factors(&t.var_powers);
            let mut factors = Vec::new();
            if !abs.is_one() || vars.is_empty() {
                factors.push(fmt_rational(&abs));
            }
            factors.extend(vars);
            write!(f, "{}", factors.join("*"))?;
            for g in &t.gamma_args {
                write!(f, "/Gamma({})", fmt_exponent(&(g + Exponent::one())))?;
            }
        }
        Ok(())
    }
}

fn reduce_power(power: &Exponent, coeff: &mut BigRational, gamma_args: &mut Vec<Exponent>) -> Result<()> {
    if power.is_negative() {
        return Err(Error::NegativeUmbralExponent(fmt_exponent(power)));
    }
    if power.is_integer() {
        let k = power.to_integer() as u32;
        *coeff /= BigRational::from_integer(big_factorial(k));
    } else {
        gamma_args.push(*power);
    }
    Ok(())
}

/// Applies `c^g -> 1/Gamma(g + 1)` and `d^g -> 1/Gamma(g + 1)` to every monomial.
pub fn vacuum_reduce(e: &UmbralExpr) -> Result<ReducedSum> {
    let mut terms = Vec::with_capacity(e.monomials().len());
    for m in e.monomials() {
        let mut coeff = m.coeff.clone();
        let mut gamma_args = Vec::new();
        reduce_power(&m.c_power, &mut coeff, &mut gamma_args)?;
        reduce_power(&m.d_power, &mut coeff, &mut gamma_args)?;
        terms.push(ReducedTerm {
            coeff,
            var_powers: m.var_powers.clone(),
            gamma_args,
        });
    }
    Ok(ReducedSum::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::umbral::expand_binomial_power;
    use num_bigint::BigInt;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reduce_pure_powers() {
        let c2 = UmbralExpr::c_hat(Exponent::from_integer(2));
        let r = vacuum_reduce(&c2).unwrap();
        assert_eq!(r.terms().len(), 1);
        assert_eq!(r.terms()[0].coeff, rational(1, 2));
        assert_eq!(r.to_string(), "(1/2)");
        let one = vacuum_reduce(&UmbralExpr::c_hat(Exponent::zero())).unwrap();
        assert_eq!(one.to_string(), "1");
        assert_eq!(
            vacuum_reduce(&UmbralExpr::d_hat(Exponent::from_integer(3)))
                .unwrap()
                .terms()[0]
                .coeff,
            rational(1, 6)
        );
    }

    #[test]
    fn reduce_laguerre_two() {
        let r = vacuum_reduce(&expand_binomial_power("y", "x", 2)).unwrap();
        assert_eq!(r.to_string(), "y^2 - 2*x*y + (1/2)*x^2");
        let v = r.evaluate(&BTreeMap::from([("x", 1.0), ("y", 1.0)]));
        assert_eq!(v, -0.5);
    }

    #[test]
    fn fractional_powers_stay_symbolic() {
        // c^(1/2) (y - c x)^2 reduces to y^2/G(3/2) - 2xy/G(5/2) + x^2/G(7/2)
        let e = &UmbralExpr::c_hat(Exponent::new(1, 2)) * &expand_binomial_power("y", "x", 2);
        let r = vacuum_reduce(&e).unwrap();
        assert_eq!(
            r.to_string(),
            "y^2/Gamma(3/2) - 2*x*y/Gamma(5/2) + x^2/Gamma(7/2)"
        );
        let args: Vec<_> = r.terms().iter().map(|t| t.gamma_args.clone()).collect();
        assert!(args.iter().all(|a| a.len() == 1));
        // L_2^(1/2)(x, y) carries the prefactor Gamma(7/2)/2!
        let vals = BTreeMap::from([("x", 0.7), ("y", 1.3)]);
        let lag = crate::poly::laguerre_assoc(2, 0.5, 0.7, 1.3).unwrap();
        let want = lag * 2.0 * crate::special::reciprocal_gamma(2.5).unwrap();
        assert!((r.evaluate(&vals) - want).abs() < 1e-14);
    }

    #[test]
    fn negative_exponent_is_an_error() {
        let e = UmbralExpr::c_hat(Exponent::from_integer(-1));
        assert!(matches!(vacuum_reduce(&e), Err(Error::NegativeUmbralExponent(_))));
    }

    #[test]
    fn structural_equality_of_gamma_args() {
        let a = ReducedSum::from_terms([ReducedTerm {
            coeff: rational(1, 1),
            var_powers: VarPowers::new(),
            gamma_args: vec![Exponent::new(3, 2), Exponent::new(1, 2)],
        }]);
        let b = ReducedSum::from_terms([ReducedTerm {
            coeff: rational(1, 1),
            var_powers: VarPowers::from([("x".to_string(), 0)]),
            gamma_args: vec![Exponent::new(1, 2), Exponent::new(3, 2)],
        }]);
        assert_eq!(a, b);
    }
}
