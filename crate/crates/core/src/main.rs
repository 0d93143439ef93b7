use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use freemod::cli::{run, Cli, Exit};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Exit::Input.code() as u8),
            };
        }
    };
    let report = run(&cli);
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(report.render(cli.format).as_bytes());
    let _ = out.flush();
    ExitCode::from(report.exit.code() as u8)
}
