mod commands;
mod failure;
mod output;
mod source;

use clap::{Parser, Subcommand};
use failure::Failure;
use std::path::PathBuf;
use std::process::ExitCode;

/// Solver and benchmark front end for PBS assignment problems.
///
/// Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.
#[derive(Parser)]
#[command(name = "pbs-cqaoa", version, about)]
struct Cli {
    /// Directory for result files
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance classically or with QAOA
    Solve(commands::solve::SolveArgs),
    /// Layer sweep: success probabilities and the cost histogram
    Benchmark(commands::benchmark::BenchmarkArgs),
    /// Feasible-space versus full-space dimension study
    Dims(commands::dims::DimsArgs),
    /// Gradient variance sweep over growing qubit counts
    Variance(commands::variance::VarianceArgs),
    /// Export the penalty-weighted QUBO as sparse triplets
    ExportQubo(commands::export_qubo::ExportQuboArgs),
}

/// Simulator qubit cap, overridable through the environment.
fn qubit_cap() -> Result<usize, Failure> {
    match std::env::var("PBS_CQAOA_MAX_QUBITS") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::usage(anyhow::anyhow!(
                "PBS_CQAOA_MAX_QUBITS must be a positive integer, got {text:?}"
            ))
        }),
        Err(_) => Ok(pbs_core::sim::DEFAULT_MAX_QUBITS),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    std::fs::create_dir_all(&cli.out)
        .map_err(|e| Failure::usage(anyhow::anyhow!("cannot create output dir: {e}")))?;
    let cap = qubit_cap()?;
    match cli.command {
        Command::Solve(args) => commands::solve::run(&cli.out, cap, args),
        Command::Benchmark(args) => commands::benchmark::run(&cli.out, cap, args),
        Command::Dims(args) => commands::dims::run(&cli.out, args),
        Command::Variance(args) => commands::variance::run(&cli.out, cap, args),
        Command::ExportQubo(args) => commands::export_qubo::run(&cli.out, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(if failure.usage { 2 } else { 1 })
        }
    }
}
