// Gamma, the Bessel-Wright function and the Bessel-Tricomi function.

use umbral_laguerre::error::Result;
use umbral_laguerre::special::{bessel_tricomi0, gamma, ln_gamma, reciprocal_gamma, wright2};

pub fn run_example() -> Result<Vec<(&'static str, f64)>> {
    Ok(vec![
        ("Gamma(1/2)^2", gamma(0.5).powi(2)),
        ("Gamma(10)", gamma(10.0)),
        ("ln Gamma(200)", ln_gamma(200.0)),
        ("1/Gamma(-1/2 + 1)", reciprocal_gamma(-0.5)?),
        ("W_0(1|2)", wright2(0.0, 1.0)?),
        ("W_2.5(-3|2)", wright2(2.5, -3.0)?),
        ("J0(2) = C0(1)", bessel_tricomi0(1.0)),
        ("I0(2) = C0(-1)", bessel_tricomi0(-1.0)),
    ])
}

fn main() -> Result<()> {
    for (name, value) in run_example()? {
        println!("{name:>18} = {value:.16e}");
    }
    Ok(())
}
