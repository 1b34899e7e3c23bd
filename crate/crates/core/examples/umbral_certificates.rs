// Exact umbral reductions and their certificates.

use umbral_laguerre::error::Result;
use umbral_laguerre::umbral::{
    certify_bessel_fused, certify_laguerre, certify_q_from_hermite, certify_wright_reduction,
    laguerre_umbral, q_umbral, vacuum_reduce, wright_umbral, Exponent, UmbralExpr,
};

pub fn run_example() -> Result<Vec<String>> {
    let mut lines = Vec::new();
    let l3 = laguerre_umbral(3);
    lines.push(format!("(y - c x)^3 = {l3}"));
    lines.push(format!("  reduced   = {}", vacuum_reduce(&l3)?));
    lines.push(format!("Q_4^(1)     = {}", vacuum_reduce(&q_umbral(4, 1))?));
    lines.push(format!(
        "W_0 (4 terms) = {}",
        vacuum_reduce(&wright_umbral(0, 3))?
    ));

    // Fractional powers survive as Gamma factors.
    let half = &UmbralExpr::c_hat(Exponent::new(1, 2)) * &laguerre_umbral(2);
    lines.push(format!("c^(1/2) (y - c x)^2 = {}", vacuum_reduce(&half)?));

    let laguerre = (0..=20).all(certify_laguerre);
    let q = (0..=12).all(|n| (0..=5).all(|nu| certify_q_from_hermite(n, nu)));
    let wright = (0..=5).all(|nu| (0..=10).all(|k| certify_wright_reduction(nu, k)));
    let bessel = (0..=5).all(|n| certify_bessel_fused(n, 4));
    lines.push(format!(
        "certified: laguerre {laguerre}, q {q}, wright {wright}, bessel {bessel}"
    ));
    Ok(lines)
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
