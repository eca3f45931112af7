//! `permdeg`: compute degrees, verify theorem statements, print tables and
//! manage the lattice cache.
//!
//! Exit codes: 0 success, 1 a failing verdict, 2 usage or parse error,
//! 3 i/o error.

mod cli;
mod commands;
mod error;
mod output;
mod source;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use commands::Context;
use error::CliResult;

fn run(cli: &Cli) -> CliResult<commands::Output> {
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            return Err(error::CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| error::CliError::Usage(e.to_string()))?;
    }
    let ctx = Context::new(&cli.global);
    match &cli.command {
        Command::Compute { specs } => commands::compute(&ctx, specs),
        Command::Verify(args) => commands::verify(&ctx, args),
        Command::Table { preset, max_n } => commands::table(&ctx, *preset, *max_n),
        Command::Cache { action } => commands::cache(&ctx, *action),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("{w}");
            }
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
