mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if let Some(msg) = outcome.stderr {
                eprintln!("{msg}");
            }
            ExitCode::from(outcome.code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(commands::INVALID_INPUT)
        }
    }
}
