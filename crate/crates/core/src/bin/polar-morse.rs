use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polar_morse::corpus::{render_selftest, run_selftest};
use polar_morse::pipeline::{
    error_exit_code, parse_rational, render_oracle_only, render_report, run_oracle_only, run_pipeline_with, Format,
    JobConfig, RunOptions, EXIT_INPUT,
};
use polar_morse::{ideal::IdealEngine, Error};

#[derive(Parser)]
#[command(name = "polar-morse", version, about = "Stratified Morse numbers of linear Morsifications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Morse numbers, genericity probe and oracle cross-check.
    Compute {
        /// Job file (json); `-` reads stdin.
        #[arg(long)]
        input: String,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        no_oracle: bool,
        /// Run a single seed instead of the job's list.
        #[arg(long)]
        seed_override: Option<u64>,
        /// Fill `timings_ms` (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Numeric critical points of f - λℓ at one λ.
    Oracle {
        #[arg(long)]
        input: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Runs the built-in corpus.
    Selftest {
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

fn read_job(path: &str) -> Result<JobConfig, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?
    };
    JobConfig::from_json(&text)
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Compute { input, format, no_oracle, seed_override, timings } => {
            let job = read_job(&input)?;
            let options = RunOptions { skip_oracle: no_oracle, seed_override, record_timings: timings };
            let report = run_pipeline_with(&IdealEngine::default(), &job, &options)?;
            print!("{}", render_report(&report, format));
            Ok(report.exit_code())
        }
        Command::Oracle { input, lambda, format } => {
            let job = read_job(&input)?;
            let lambda = parse_rational(&lambda)?;
            let report = run_oracle_only(&job, &lambda)?;
            print!("{}", render_oracle_only(&report, format));
            Ok(0)
        }
        Command::Selftest { format } => {
            let report = run_selftest()?;
            print!("{}", render_selftest(&report, format));
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
