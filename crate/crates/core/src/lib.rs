//! Gaussian-weighted integrals of two-variable Laguerre polynomials in
//! closed form, with two independent checks: exact umbral reduction over the
//! rationals and a Gauss-Hermite quadrature oracle.
//!
//! ```
//! use umbral_laguerre::integrals::laguerre_gaussian;
//! use umbral_laguerre::oracle::{integrate_gaussian_weighted, QuadratureSpec};
//! use umbral_laguerre::poly::laguerre2;
//! use umbral_laguerre::umbral::certify_laguerre;
//!
//! // int L_2(x, 1) exp(-x^2) dx = 1.25 sqrt(pi)
//! let closed = laguerre_gaussian(2, 1.0, 1.0).unwrap();
//! assert!((closed - 1.25 * std::f64::consts::PI.sqrt()).abs() < 1e-15);
//!
//! let f = |x: f64| laguerre2(2, x, 1.0).unwrap();
//! let quad = integrate_gaussian_weighted(&f, 1.0, &QuadratureSpec::default()).unwrap();
//! assert!((quad.value - closed).abs() < 1e-13);
//!
//! assert!(certify_laguerre(2));
//! ```

pub mod cli;
pub mod error;
pub mod integrals;
pub mod oracle;
pub mod poly;
pub mod special;
pub mod sum;
pub mod umbral;
pub mod verify;
