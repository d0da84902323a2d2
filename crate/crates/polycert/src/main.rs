use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use polycert::cli::{run, Cli, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => Status::RejectedInput.exit_code(),
            };
            let _ = err.print();
            return ExitCode::from(code as u8);
        }
    };
    let result = run(cli.command);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for line in &result.lines {
        // A closed pipe downstream is not our error; keep the exit code.
        if writeln!(out, "{line}").is_err() {
            break;
        }
    }
    ExitCode::from(result.status.exit_code() as u8)
}
