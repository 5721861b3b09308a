use std::io::Write;
use std::process::ExitCode;

use abid::cli::{run, Cli, CliError};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(outcome) => outcome.exit_code(),
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
