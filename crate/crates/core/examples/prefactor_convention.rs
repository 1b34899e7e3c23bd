// Which Laguerre index carries the prefactor of the Laguerre-Hermite integral.
//
// Both readings agree when `m == n`; asymmetric degrees tell them apart.

use umbral_laguerre::error::Result;
use umbral_laguerre::integrals::{FormulaId, IntegralParams, PrefactorConvention};
use umbral_laguerre::special::OrderParam;
use umbral_laguerre::verify::{verify_all, VerifyOptions};

pub fn run_example() -> Result<Vec<(PrefactorConvention, usize, usize)>> {
    let mut points = Vec::new();
    for m in 0..=4 {
        for n in 0..=4 {
            points.push(IntegralParams {
                m,
                n,
                nu: OrderParam::new(1.5)?,
                y: 0.5,
                f: 1.0,
                g: 0.5,
                z: 0.0,
                ..Default::default()
            });
        }
    }
    let mut tally = Vec::new();
    for convention in [PrefactorConvention::M, PrefactorConvention::N] {
        let opts = VerifyOptions {
            convention,
            ..Default::default()
        };
        let reports = verify_all(FormulaId::LaguerreHermiteGaussian, &points, &opts)?;
        tally.push((
            convention,
            reports.iter().filter(|r| r.pass).count(),
            reports.len(),
        ));
    }
    Ok(tally)
}

fn main() -> Result<()> {
    for (convention, passed, total) in run_example()? {
        println!("convention {convention:?}: {passed}/{total} agree with quadrature");
    }
    Ok(())
}
