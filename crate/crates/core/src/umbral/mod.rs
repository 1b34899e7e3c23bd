//! Exact umbral calculus over the rationals.
//!
//! An [`UmbralExpr`] is a polynomial in named formal variables and in the two
//! umbral symbols `c` and `d`, with arbitrary-precision rational
//! coefficients. The umbral symbols commute with everything, so products
//! simply add exponents. Evaluation against the vacuum happens once, at the
//! end, in [`vacuum_reduce`]: `c^g` becomes `1/Gamma(g + 1)`, and so does
//! `d^g` (against its own vacuum).

mod certify;
mod reduce;

pub use certify::{
    certify_bessel_fused, certify_laguerre, certify_q_from_hermite, certify_wright_reduction,
    laguerre_explicit, laguerre_umbral, q_explicit, q_umbral, wright_explicit, wright_umbral,
};
pub use reduce::{vacuum_reduce, ReducedSum, ReducedTerm};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

/// Exponent of an umbral symbol; rational so that `c^nu` with fractional `nu` is exact.
pub type Exponent = Rational64;

/// Exponents of the formal variables. Absent means zero.
pub type VarPowers = BTreeMap<String, u32>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct MonomialKey {
    c_power: Exponent,
    d_power: Exponent,
    var_powers: VarPowers,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmbralMonomial {
    pub coeff: BigRational,
    pub c_power: Exponent,
    pub d_power: Exponent,
    pub var_powers: VarPowers,
}

impl UmbralMonomial {
    pub fn new(coeff: BigRational) -> Self {
        Self {
            coeff,
            c_power: Exponent::zero(),
            d_power: Exponent::zero(),
            var_powers: VarPowers::new(),
        }
    }

    pub fn with_var(mut self, name: &str, power: u32) -> Self {
        if power > 0 {
            *self.var_powers.entry(name.to_string()).or_insert(0) += power;
        }
        self
    }

    pub fn with_c(mut self, power: Exponent) -> Self {
        self.c_power += power;
        self
    }

    pub fn with_d(mut self, power: Exponent) -> Self {
        self.d_power += power;
        self
    }

    fn key(&self) -> MonomialKey {
        MonomialKey {
            c_power: self.c_power,
            d_power: self.d_power,
            var_powers: self.var_powers.clone(),
        }
    }

    fn mul(&self, other: &UmbralMonomial) -> UmbralMonomial {
        let mut var_powers = self.var_powers.clone();
        for (v, p) in &other.var_powers {
            *var_powers.entry(v.clone()).or_insert(0) += p;
        }
        UmbralMonomial {
            coeff: &self.coeff * &other.coeff,
            c_power: self.c_power + other.c_power,
            d_power: self.d_power + other.d_power,
            var_powers,
        }
    }
}

/// Canonical sum of monomials: sorted by key, no repeated key, no zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UmbralExpr {
    monomials: Vec<UmbralMonomial>,
}

impl UmbralExpr {
    /// Builds the canonical form of an arbitrary monomial list.
    pub fn from_monomials(monomials: impl IntoIterator<Item = UmbralMonomial>) -> Self {
        let mut merged: BTreeMap<MonomialKey, BigRational> = BTreeMap::new();
        for m in monomials {
            let slot = merged.entry(m.key()).or_insert_with(BigRational::zero);
            *slot += m.coeff;
        }
        let monomials = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, coeff)| UmbralMonomial {
                coeff,
                c_power: k.c_power,
                d_power: k.d_power,
                var_powers: k.var_powers,
            })
            .collect();
        Self { monomials }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_monomials([UmbralMonomial::new(c)])
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(name: &str) -> Self {
        Self::from_monomials([UmbralMonomial::new(BigRational::one()).with_var(name, 1)])
    }

    /// `c^power`
    pub fn c_hat(power: Exponent) -> Self {
        Self::from_monomials([UmbralMonomial::new(BigRational::one()).with_c(power)])
    }

    /// `d^power`
    pub fn d_hat(power: Exponent) -> Self {
        Self::from_monomials([UmbralMonomial::new(BigRational::one()).with_d(power)])
    }

    pub fn monomials(&self) -> &[UmbralMonomial] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Re-canonicalizes; a no-op on any value built through this API.
    pub fn canonical(&self) -> Self {
        Self::from_monomials(self.monomials.iter().cloned())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_monomials(self.monomials.iter().map(|m| UmbralMonomial {
            coeff: &m.coeff * factor,
            ..m.clone()
        }))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &UmbralExpr {
    type Output = UmbralExpr;

    fn add(self, rhs: &UmbralExpr) -> UmbralExpr {
        UmbralExpr::from_monomials(self.monomials.iter().chain(&rhs.monomials).cloned())
    }
}

impl Add for UmbralExpr {
    type Output = UmbralExpr;

    fn add(self, rhs: UmbralExpr) -> UmbralExpr {
        &self + &rhs
    }
}

impl Neg for &UmbralExpr {
    type Output = UmbralExpr;

    fn neg(self) -> UmbralExpr {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &UmbralExpr {
    type Output = UmbralExpr;

    fn sub(self, rhs: &UmbralExpr) -> UmbralExpr {
        self + &(-rhs)
    }
}

impl Sub for UmbralExpr {
    type Output = UmbralExpr;

    fn sub(self, rhs: UmbralExpr) -> UmbralExpr {
        &self - &rhs
    }
}

impl Mul for &UmbralExpr {
    type Output = UmbralExpr;

    fn mul(self, rhs: &UmbralExpr) -> UmbralExpr {
        UmbralExpr::from_monomials(
            self.monomials
                .iter()
                .flat_map(|a| rhs.monomials.iter().map(move |b| a.mul(b))),
        )
    }
}

impl Mul for UmbralExpr {
    type Output = UmbralExpr;

    fn mul(self, rhs: UmbralExpr) -> UmbralExpr {
        &self * &rhs
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("({}/{})", q.numer(), q.denom())
    }
}

pub(crate) fn fmt_exponent(q: &Exponent) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for UmbralExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            let negative = m.coeff < BigRational::zero();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            let abs = if negative {
                -m.coeff.clone()
            } else {
                m.coeff.clone()
            };
            if !abs.is_one() {
                factors.push(fmt_rational(&abs));
            }
            for (sym, p) in [("c", &m.c_power), ("d", &m.d_power)] {
                if p.is_one() {
                    factors.push(sym.to_string());
                } else if !p.is_zero() {
                    factors.push(format!("{sym}^{}", fmt_exponent(p)));
                }
            }
            factors.extend(reduce::var_factors(&m.var_powers));
            if factors.is_empty() {
                factors.push("1".into());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// `(y - c x)^n` expanded: `sum_k C(n,k) (-1)^k c^k x^k y^(n-k)`.
pub fn expand_binomial_power(y_sym: &str, x_sym: &str, n: u32) -> UmbralExpr {
    let base = &UmbralExpr::var(y_sym) - &(&UmbralExpr::c_hat(Exponent::one()) * &UmbralExpr::var(x_sym));
    base.pow(n)
}

/// `H_n(x, y) = n! sum_k x^(n-2k) y^k / ((n-2k)! k!)` with symbolic arguments.
pub fn hermite_expr(n: u32, x: &UmbralExpr, y: &UmbralExpr) -> UmbralExpr {
    let nf = crate::poly::exact::big_factorial(n);
    let mut acc = UmbralExpr::zero();
    for k in 0..=n / 2 {
        let den = crate::poly::exact::big_factorial(n - 2 * k) * crate::poly::exact::big_factorial(k);
        let coeff = BigRational::new(nf.clone(), den);
        acc = acc + (&x.pow(n - 2 * k) * &y.pow(k)).scale(&coeff);
    }
    acc
}

/// Truncated exponential `sum_{k <= terms} e^k / k!`.
pub fn exp_truncated(e: &UmbralExpr, terms: u32) -> UmbralExpr {
    let mut acc = UmbralExpr::zero();
    let mut power = UmbralExpr::one();
    for k in 0..=terms {
        if k > 0 {
            power = &power * e;
        }
        let inv = BigRational::new(BigInt::one(), crate::poly::exact::big_factorial(k));
        acc = acc + power.scale(&inv);
    }
    acc
}
