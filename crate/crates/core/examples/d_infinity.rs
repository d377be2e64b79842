//! The D∞ family `x^k*y` with `ℓ = x + y`: the polar curve is the line
//! `k*y = x` and the image curve has axis orders `k + 1` and `1`.
//!
//! ```bash
//! cargo run -p polar-morse --example d_infinity
//! ```

use polar_morse::algebra::{parse_polynomial, VariableSet};
use polar_morse::ideal::IdealEngine;
use polar_morse::polar::{polar_ideal, LinearForm, Stratum};
use polar_morse::reduction::{image_plane_curve, morse_number};

pub fn run() -> Result<Vec<u32>, Box<dyn std::error::Error>> {
    let vars = VariableSet::new(["x", "y"])?;
    let engine = IdealEngine::default();
    let ell = LinearForm::parse("x + y", &vars)?;
    let mut ms = Vec::new();
    for k in 2..=5 {
        let f = parse_polynomial(&format!("x^{k}*y"), &vars)?;
        let polar = polar_ideal(&engine, &f, &ell, &Stratum::ambient(2))?;
        let germ = image_plane_curve(&engine, &polar, &ell, &f)?;
        let m = morse_number(Some(&germ))?;
        println!(
            "k = {k}: Γ = V({}), G = {}, ord = ({}, {}), m = {m}",
            polar.ideal.generators()[0].fmt_with(&vars),
            germ.fmt(),
            germ.ord_u0(),
            germ.ord_0v()
        );
        ms.push(m);
    }
    Ok(ms)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run().map(|_| ())
}
