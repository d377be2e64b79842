//! `x^2*y^2 + x^3` with `ℓ = x + y` through the whole pipeline, oracle
//! included, printed as text and json.
//!
//! ```bash
//! cargo run -p polar-morse --example j_infinity
//! ```

use polar_morse::pipeline::{render_report, run_pipeline, Format, JobConfig};

pub fn run() -> Result<Option<u32>, Box<dyn std::error::Error>> {
    let job = JobConfig::new(&["x", "y"], "x^2*y^2 + x^3").with_linear_form("x + y");
    let report = run_pipeline(&job)?;
    print!("{}", render_report(&report, Format::Text));
    println!();
    print!("{}", render_report(&report, Format::Json));
    Ok(report.morse_numbers()[0])
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run().map(|_| ())
}
