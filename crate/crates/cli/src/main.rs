use clap::Parser;
use equipart_cli::{execute, Args, RunError};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(output) => emit(&args, &output),
        Err(RunError::Acceptance(ledger)) => {
            // The ledger is still data; print it, then fail.
            let _ = emit(&args, &ledger);
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn emit(args: &Args, output: &str) -> ExitCode {
    match &args.out {
        None => {
            print!("{output}");
            let _ = std::io::stdout().flush();
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(path, output) {
            Ok(()) => ExitCode::SUCCESS,
            Err(err) => {
                eprintln!("error: cannot write {}: {err}", path.display());
                ExitCode::from(3)
            }
        },
    }
}
