use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cventlab_cli::{render, run, Cli, CliError};

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on parse errors and 0 for --help/--version.
    let cli = Cli::parse();
    match run(&cli).and_then(|table| emit(&cli, &render(&cli, &table))) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
