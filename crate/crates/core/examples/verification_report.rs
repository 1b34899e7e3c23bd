// A verification sweep written out as JSON lines.

use umbral_laguerre::error::Result;
use umbral_laguerre::integrals::{FormulaId, GaussianParams, IntegralParams};
use umbral_laguerre::special::OrderParam;
use umbral_laguerre::verify::{verify_all, VerifyOptions};

pub fn run_example() -> Result<Vec<String>> {
    let mut points = Vec::new();
    for n in 0..=3 {
        for alpha in [0.5, 2.0] {
            points.push(IntegralParams {
                n,
                nu: OrderParam::new(0.5)?,
                shift: 1.0,
                u: -2.0,
                gaussian: GaussianParams::centered(alpha)?,
                ..Default::default()
            });
        }
    }
    let reports = verify_all(
        FormulaId::LaguerreShiftedGaussian,
        &points,
        &VerifyOptions::default(),
    )?;
    Ok(reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("reports serialize"))
        .collect())
}

fn main() -> Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
