//! Runs a job file the same way `polar-morse compute` does.
//!
//! ```bash
//! cargo run -p polar-morse --example run_job -- crates/core/jobs/d_infinity_k3.json
//! ```

use polar_morse::pipeline::{render_report, run_pipeline, Format, JobConfig, MorseReport};

pub fn run(path: &str) -> Result<MorseReport, Box<dyn std::error::Error>> {
    let job = JobConfig::from_json(&std::fs::read_to_string(path)?)?;
    let report = run_pipeline(&job)?;
    print!("{}", render_report(&report, Format::Text));
    Ok(report)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/jobs/stratified.json").to_string());
    let report = run(&path)?;
    std::process::exit(report.exit_code());
}
