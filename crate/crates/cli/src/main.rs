use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use stringcone_cli::{run, Cli, EXIT_MISMATCH};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.text.as_bytes()).is_err() {
                return ExitCode::from(EXIT_MISMATCH);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
