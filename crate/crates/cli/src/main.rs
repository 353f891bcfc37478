mod args;
mod builtins;
mod commands;
mod error;
mod output;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("FCC_TRIG_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("FCC_TRIG_THREADS must be a non-negative integer, got `{raw}`")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    configure_threads()?;
    match &cli.command {
        Command::Nodes(a) => commands::nodes(a),
        Command::Interpolate(a) => commands::interpolate(a),
        Command::Cubature(a) => commands::cubature(a),
        Command::Lebesgue(a) => commands::lebesgue(a),
        Command::Kernel(a) => commands::kernel(a),
        Command::Verify(a) => verify::verify(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
