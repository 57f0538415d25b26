use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use invariant_lab_cli::{oracle_bound_from, run, Cli, ORACLE_BOUND_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut diag = stderr.lock();

    let result = oracle_bound_from(std::env::var(ORACLE_BOUND_ENV).ok().as_deref())
        .and_then(|bound| run(&cli, bound, &mut out, &mut diag));
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = writeln!(diag, "invariant-lab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
