use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use tricalc_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(outcome.stdout.as_bytes())
                .and_then(|()| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("tricalc: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
