use std::io::Write;
use std::process::ExitCode;

use bhl_cli::{configure_threads, error_code, run, Cli, Format};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| run(&cli.command));
    match result {
        Ok(r) => {
            let mut out = std::io::stdout().lock();
            let text = match cli.command.input().format {
                Format::Json => &r.json,
                Format::Text => &r.summary,
            };
            let _ = out.write_all(text.as_bytes());
            if r.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e:#}", error_code(&e));
            ExitCode::from(2)
        }
    }
}
