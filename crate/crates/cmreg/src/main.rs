use std::process::ExitCode;

use clap::Parser;

use cmreg::cli::{self, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.report);
            if outcome.math_failure {
                // The report itself documents what failed; the exit code
                // makes the inconsistency visible to scripts.
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
