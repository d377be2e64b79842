//! For isolated singularities the Morse number is the Milnor number. The
//! Brieskorn–Pham germs `x^a + y^b` also satisfy `μ = (a-1)(b-1)`.
//!
//! ```bash
//! cargo run -p polar-morse --example brieskorn_milnor
//! ```

use polar_morse::algebra::{parse_polynomial, VariableSet};
use polar_morse::ideal::IdealEngine;
use polar_morse::oracle::{brieskorn_pham_milnor, milnor_number, MilnorNumber};
use polar_morse::pipeline::{run_pipeline, JobConfig};

pub fn run() -> Result<Vec<(String, u32, MilnorNumber)>, Box<dyn std::error::Error>> {
    let vars = VariableSet::new(["x", "y"])?;
    let engine = IdealEngine::default();
    let mut rows = Vec::new();
    for (a, b) in [(2, 2), (3, 3), (4, 3), (3, 4), (2, 4)] {
        let f = format!("x^{a} + y^{b}");
        let mu = milnor_number(&engine, &parse_polynomial(&f, &vars)?)?;
        let report = run_pipeline(&JobConfig::new(&["x", "y"], &f).without_oracle())?;
        let m = report.morse_numbers()[0].ok_or("no Morse number")?;
        println!("{f:<12} m = {m}  μ = {mu:?}  (a-1)(b-1) = {}", brieskorn_pham_milnor(&[a, b]));
        rows.push((f, m, mu));
    }
    let mu = milnor_number(&engine, &parse_polynomial("x^2*y", &vars)?)?;
    println!("x^2*y        μ = {mu:?}");
    Ok(rows)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run().map(|_| ())
}
