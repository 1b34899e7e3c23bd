// Closed forms for Laguerre-Gaussian integrals next to the quadrature oracle.

use umbral_laguerre::error::Result;
use umbral_laguerre::integrals::{FormulaId, GaussianParams, IntegralParams};
use umbral_laguerre::special::OrderParam;
use umbral_laguerre::verify::{verify, VerificationReport, VerifyOptions};

pub fn run_example() -> Result<Vec<VerificationReport>> {
    let cases = [
        (
            FormulaId::MasterGaussian,
            IntegralParams {
                n: 5,
                a: 2.0,
                b: -1.0,
                gaussian: GaussianParams::new(1.5, 0.5)?,
                ..Default::default()
            },
        ),
        (
            FormulaId::LaguerreGaussian,
            IntegralParams {
                n: 4,
                u: 1.0,
                ..Default::default()
            },
        ),
        (
            FormulaId::LaguerreAssocGaussian,
            IntegralParams {
                n: 6,
                nu: OrderParam::new(2.5)?,
                u: -2.0,
                gaussian: GaussianParams::centered(0.5)?,
                ..Default::default()
            },
        ),
        (
            FormulaId::LaguerreShiftedGaussian,
            IntegralParams {
                n: 5,
                nu: OrderParam::new(0.5)?,
                shift: -1.0,
                u: 3.0,
                ..Default::default()
            },
        ),
        (
            FormulaId::LaguerreProductGaussian,
            IntegralParams {
                m: 3,
                n: 5,
                mu: OrderParam::new(0.5)?,
                nu: OrderParam::new(1.0)?,
                u: 1.0,
                v: -2.0,
                gaussian: GaussianParams::centered(2.0)?,
                ..Default::default()
            },
        ),
        (
            FormulaId::LaguerreHermiteGaussian,
            IntegralParams {
                m: 4,
                n: 2,
                nu: OrderParam::new(1.0)?,
                y: 1.0,
                f: -0.5,
                g: 1.0,
                z: -1.0,
                ..Default::default()
            },
        ),
    ];
    cases
        .iter()
        .map(|(formula, params)| verify(*formula, params, &VerifyOptions::default()))
        .collect()
}

fn main() -> Result<()> {
    for r in run_example()? {
        println!(
            "{:<26} closed {:>24.16e}  oracle {:>24.16e}  rel_err {:.1e}  GH order {}  {}",
            r.formula_id.name(),
            r.closed_form,
            r.oracle,
            r.rel_err,
            r.oracle_metadata.orders_used,
            if r.pass { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
