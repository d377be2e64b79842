//! Direct numeric Morsification: solve the critical system of `f - λℓ`
//! and count the nondegenerate points in a fixed ball.
//!
//! ```bash
//! cargo run -p polar-morse --example numeric_oracle
//! ```

use polar_morse::algebra::{parse_polynomial, VariableSet};
use polar_morse::ideal::IdealEngine;
use polar_morse::oracle::{count_on_stratum, solve_bivariate, OracleConfig, StableCount};
use polar_morse::polar::{LinearForm, Stratum};

pub fn run() -> Result<StableCount, Box<dyn std::error::Error>> {
    let vars = VariableSet::new(["x", "y"])?;
    let p = |s: &str| parse_polynomial(s, &vars);
    let engine = IdealEngine::default();

    for z in solve_bivariate(&engine, &[p("2*x*y - 1/10000")?, p("x^2 - 1/10000")?])? {
        println!("({:.6}, {:.6})", z[0].re, z[1].re);
    }

    let f = p("x^3*y + y^4")?;
    let ell = LinearForm::parse("x - 2*y", &vars)?;
    let report = count_on_stratum(&engine, &f, &ell, &Stratum::ambient(2), &OracleConfig::default())?;
    for pl in &report.per_lambda {
        println!("λ = {}: {} Morse points, discarded {:?}", pl.lambda, pl.count(), pl.discarded);
    }
    println!("stable count: {:?}", report.stable_count);
    Ok(report.stable_count)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run().map(|_| ())
}
