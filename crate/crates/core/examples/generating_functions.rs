// Truncated generating functions and the operational form of `Q_n`.

use umbral_laguerre::error::Result;
use umbral_laguerre::poly::exact::{q_coefficients_explicit, q_coefficients_operational};
use umbral_laguerre::verify::{gf_check, GfFamily, GfGrid, GfReport};

pub fn run_example() -> Result<(Vec<GfReport>, bool)> {
    let grid = GfGrid::default();
    let mut reports = Vec::new();
    for terms in [5, 10, 20, 30] {
        reports.push(gf_check(GfFamily::Hermite, terms, &grid, 1e-10)?);
        reports.push(gf_check(GfFamily::Q, terms, &grid, 1e-10)?);
    }
    let operational = (0..=12)
        .all(|n| (0..=4).all(|nu| q_coefficients_explicit(n, nu) == q_coefficients_operational(n, nu)));
    Ok((reports, operational))
}

fn main() -> Result<()> {
    let (reports, operational) = run_example()?;
    for r in reports {
        println!(
            "{:?} N={:<2} max_dev {:.3e} {}",
            r.family,
            r.terms,
            r.max_dev,
            if r.pass { "pass" } else { "fail" }
        );
    }
    println!("operational form matches explicit coefficients: {operational}");
    Ok(())
}
