//! `qgal`: verification front end for the deformed extended Galilei algebra
//! toolkit. Symbolic subcommands classify cobrackets and check quantized
//! coproducts and exchange elements by exact series arithmetic; numeric
//! subcommands integrate the deformed N-particle systems and lattice fields
//! and certify their conserved structure.
//!
//! Every subcommand prints one JSON report (schema "v1") to stdout. Reports
//! are deterministic: the same resolved configuration (including seeds)
//! yields byte-identical output. Exit codes: 0 all checks passed, 1 a
//! residual/stability bound failed, 2 usage error, 3 recognized but
//! deliberately unimplemented case.

mod classify;
mod config;
mod hopf_cmd;
mod pde_cmd;
mod qparse;
mod report;
mod rmatrix_cmd;
mod simulate_cmd;

use clap::{Parser, Subcommand};

use report::{Outcome, UsageError, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "qgal",
    version,
    about = "Verification toolkit for deformed extended Galilei structures",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a cobracket or classical r-matrix among the tabulated families
    Classify(classify::ClassifyArgs),
    /// Run the consistency suite on a quantized family
    VerifyHopf(hopf_cmd::HopfArgs),
    /// Check an exchange element against the family coproduct
    VerifyRmatrix(rmatrix_cmd::RmatrixArgs),
    /// Integrate a deformed N-particle system and certify its invariants
    Simulate(simulate_cmd::SimulateArgs),
    /// Evolve or analyze the deformed lattice heat / Schrödinger equation
    Pde(pde_cmd::PdeArgs),
}

fn main() {
    let cli = Cli::parse();
    let json_path = match &cli.command {
        Command::Classify(a) => a.json.clone(),
        Command::VerifyHopf(a) => a.json.clone(),
        Command::VerifyRmatrix(a) => a.json.clone(),
        Command::Simulate(a) => a.json.clone(),
        Command::Pde(a) => a.json.clone(),
    };
    let result: Result<Outcome, UsageError> = match cli.command {
        Command::Classify(args) => classify::run(args),
        Command::VerifyHopf(args) => hopf_cmd::run(args),
        Command::VerifyRmatrix(args) => rmatrix_cmd::run(args),
        Command::Simulate(args) => simulate_cmd::run(args),
        Command::Pde(args) => pde_cmd::run(args),
    };
    let code = match result {
        Ok(outcome) => match report::emit(&outcome.report, json_path.as_deref()) {
            Ok(()) => outcome.exit,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}
