use std::process::ExitCode;

use clap::Parser;

use symtrans::cli::{self, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match cli::run(&config) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code())
        }
    }
}
