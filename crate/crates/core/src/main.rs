use std::io;
use std::process::ExitCode;

use clap::Parser;
use tbls::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match execute(&cli, &mut io::stdout().lock(), &mut io::stderr().lock()) {
        Ok(verdict) => verdict.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
