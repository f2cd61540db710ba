//! The acceptance gate: every criterion at exact values, one line each.
//! Exits nonzero when any criterion fails.

use std::process::ExitCode;

use grid_lefschetz::config::FieldMode;
use grid_lefschetz::verify::{run_suite, Criterion, SuiteOptions};

fn main() -> ExitCode {
    let result = match run_suite(FieldMode::default(), &SuiteOptions::default(), |c| println!("{}", c.line())) {
        Ok(r) => r,
        Err(e) => {
            println!("acceptance suite aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    assert_eq!(result.checks.len(), Criterion::ALL.len(), "every criterion reports");
    let passed = result.checks.iter().filter(|c| c.pass).count();
    println!("\n{passed} of {} criteria passed in {:.1}s", result.checks.len(), result.seconds);
    if passed == result.checks.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
