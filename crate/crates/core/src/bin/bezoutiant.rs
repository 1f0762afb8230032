use std::io::Write;
use std::process::ExitCode;

use bezoutiant::cli::{run, Args, EXIT_INPUT};
use clap::Parser;

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = match args.into_job() {
        Ok(job) => run(&job),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
