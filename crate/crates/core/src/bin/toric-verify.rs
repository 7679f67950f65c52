use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{CommandFactory, Parser, ValueEnum};
use toric_diagonal::report::{run, RunOptions};
use toric_diagonal::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

/// Run verification suites and print a report.
#[derive(Debug, Parser)]
#[command(name = "toric-verify", version)]
struct Cli {
    /// algebra, frustration-free, ltqo, expectation, symmetries, groupoid,
    /// invariant, no-lift, oracle-crosscheck or all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    box_size: i64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seconds; cases not started in time are reported as skipped.
    #[arg(long)]
    time_budget: Option<f64>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Include wall-clock timings (makes the output non-reproducible).
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions {
        seed: cli.seed,
        box_size: cli.box_size,
        samples: cli.samples,
        time_budget: cli.time_budget.map(Duration::from_secs_f64),
        jobs: cli.jobs,
        timing: cli.timing,
    };
    let report = match run(&cli.suite, &opts) {
        Ok(r) => r,
        Err(e @ (Error::InvalidArgument(_) | Error::UnknownSuite(_))) => {
            eprintln!("error: {e}\n\n{}", Cli::command().render_usage());
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Markdown => report.to_markdown(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
