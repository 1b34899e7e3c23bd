// Evaluating the two-variable polynomial families.
//
// `cargo run --example polynomials`

use umbral_laguerre::error::Result;
use umbral_laguerre::poly::{self, TwoIndexArgs};
use umbral_laguerre::special::classical_laguerre;

pub fn run_example() -> Result<Vec<(String, f64)>> {
    let mut rows = vec![
        ("L_2(1, 1)".to_string(), poly::laguerre2(2, 1.0, 1.0)?),
        ("H_3(1, 0)".to_string(), poly::hermite2(3, 1.0, 0.0)?),
        (
            "L_4^(1/2)(0.3, 1.2)".to_string(),
            poly::laguerre_assoc(4, 0.5, 0.3, 1.2)?,
        ),
        ("Q_5^(1)(0.7, -0.4)".to_string(), poly::q_poly(5, 1.0, 0.7, -0.4)?),
    ];

    // L_n(x, 1) is the classical Laguerre polynomial.
    let two_var = poly::laguerre2(6, 2.5, 1.0)?;
    let classical = classical_laguerre(6, 0.0, 2.5)?;
    rows.push(("L_6(2.5, 1) - L_6(2.5)".to_string(), two_var - classical));

    let args = TwoIndexArgs::new(0.5, 0.25, -1.0, 0.25, 0.5)?;
    rows.push(("H_{3,2}".to_string(), poly::hermite_2index(3, 2, &args)?));
    rows.push((
        "Q_{3,2}^(0.5,1)".to_string(),
        poly::q_2index(3, 2, 0.5, 1.0, &args)?,
    ));
    rows.push(("T_{3,2}^(0.5)".to_string(), poly::t_poly(3, 2, 0.5, &args)?));
    Ok(rows)
}

fn main() -> Result<()> {
    for (name, value) in run_example()? {
        println!("{name:>24} = {value:.16e}");
    }
    Ok(())
}
