use std::process::ExitCode;

use clap::Parser;
use condense_cli::{emit, render, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match render(&cli).and_then(|text| emit(&cli, &text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
