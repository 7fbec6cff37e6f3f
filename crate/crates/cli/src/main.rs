use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use rotschur_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut io::stdin().lock(), &mut out) {
        Ok(status) => {
            let _ = out.flush();
            ExitCode::from(status.code())
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
