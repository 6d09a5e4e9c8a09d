//! Command-line surface for the `singlet` binary: evolution traces, kernel
//! profiles and the verification suite.

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

use std::io;

pub use config::{Args, Command, Format, Grid, RunConfig};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code when a verification suite fails.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit code for usage and configuration errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] singlet_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

pub fn run_evolve(cfg: &RunConfig) -> Result<(), CliError> {
    commands::run_evolve(cfg)
}

pub fn run_kernel(cfg: &RunConfig) -> Result<(), CliError> {
    commands::run_kernel(cfg)
}

/// Runs every suite, writes the JSON report and returns the names of the
/// failing suites.
pub fn run_verify(cfg: &RunConfig) -> Result<Vec<&'static str>, CliError> {
    let opts = verify::VerifyOptions {
        seed: cfg.seed.unwrap_or(config::DEFAULT_SEED),
        rel_tol: cfg.rel_tol,
    };
    let suites = verify::run_suites(&opts);
    let body = output::json_bytes(&verify::report(&opts, &suites));
    output::emit(cfg.out.as_deref(), &body)?;
    Ok(suites
        .iter()
        .filter(|s| !s.passed())
        .map(|s| s.name)
        .collect())
}

/// Dispatches a parsed command line and returns the process exit code.
pub fn run(args: Args) -> i32 {
    let cfg = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match cfg.command {
        Command::Evolve => run_evolve(&cfg).map(|_| Vec::new()),
        Command::Kernel => run_kernel(&cfg).map(|_| Vec::new()),
        Command::Verify => run_verify(&cfg),
    };
    match result {
        Ok(failed) if failed.is_empty() => EXIT_OK,
        Ok(failed) => {
            for name in failed {
                eprintln!("verification failed: {name}");
            }
            EXIT_VERIFY_FAILED
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
