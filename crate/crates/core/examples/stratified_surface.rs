//! `f = x^2*y + z` on `C^3` split into the plane `{z = 0}` and its
//! complement. All the Morse points live on the plane.
//!
//! ```bash
//! cargo run -p polar-morse --example stratified_surface
//! ```

use polar_morse::pipeline::{render_report, run_pipeline, Format, JobConfig};

pub fn run() -> Result<Vec<Option<u32>>, Box<dyn std::error::Error>> {
    let job = JobConfig::new(&["x", "y", "z"], "x^2*y + z")
        .with_stratum("plane", &["z"], &[])
        .with_stratum("complement", &[], &["z"]);
    let report = run_pipeline(&job)?;
    print!("{}", render_report(&report, Format::Text));
    Ok(report.morse_numbers())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run().map(|_| ())
}
