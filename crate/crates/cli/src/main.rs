use std::io::Write;
use std::process::ExitCode;

use hyperlap_cli::{run_cli, BUDGET_ENV};

fn main() -> ExitCode {
    let budget = std::env::var(BUDGET_ENV).ok();
    let outcome = run_cli(std::env::args_os(), budget.as_deref());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
