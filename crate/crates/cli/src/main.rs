//! `sikorski`: decide entailments between statements about lattice maps,
//! enumerate models, extend homs and build generated algebras.
//!
//! Exit codes: 0 yes/success, 1 no, 2 input error, 3 internal invariant
//! violation.

mod commands;
mod docs;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use commands::{run, Command, Verdict};

#[derive(Debug, Parser)]
#[command(name = "sikorski", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(env) => {
            let mut out = std::io::stdout().lock();
            for line in env.payload.iter().chain(&env.trace) {
                let _ = writeln!(out, "{line}");
            }
            match env.verdict {
                Verdict::Yes => ExitCode::SUCCESS,
                Verdict::No => ExitCode::from(1),
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
