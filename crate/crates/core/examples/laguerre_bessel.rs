// The Laguerre-Bessel integral, including the regular `y = 0` row.

use umbral_laguerre::error::Result;
use umbral_laguerre::integrals::laguerre_bessel_gaussian;
use umbral_laguerre::integrals::{FormulaId, GaussianParams, IntegralParams};
use umbral_laguerre::verify::{verify_all, Tolerance, VerifyOptions};

/// `(n, y, closed form, quadrature, pass)`
pub type Row = (usize, f64, f64, f64, bool);

pub fn run_example() -> Result<Vec<Row>> {
    let mut points = Vec::new();
    for n in 0..=6 {
        for y in [0.0, 1.0] {
            points.push(IntegralParams {
                n,
                y,
                gaussian: GaussianParams::centered(1.0)?,
                ..Default::default()
            });
        }
    }
    let opts = VerifyOptions {
        tolerance: Tolerance::relative(1e-8),
        ..Default::default()
    };
    let reports = verify_all(FormulaId::LaguerreBessel, &points, &opts)?;
    let mut rows = Vec::new();
    for (p, r) in points.iter().zip(&reports) {
        debug_assert_eq!(laguerre_bessel_gaussian(p.n, p.y, 1.0)?, r.closed_form);
        rows.push((p.n, p.y, r.closed_form, r.oracle, r.pass));
    }
    Ok(rows)
}

fn main() -> Result<()> {
    println!("{:>2} {:>4} {:>24} {:>24}", "n", "y", "closed form", "quadrature");
    for (n, y, closed, oracle, pass) in run_example()? {
        println!(
            "{n:>2} {y:>4} {closed:>24.16e} {oracle:>24.16e} {}",
            if pass { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
