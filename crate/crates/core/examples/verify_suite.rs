//! The reproduction suite restricted to grids with sides at most 3, with
//! one line per check.

use grid_lefschetz::config::FieldMode;
use grid_lefschetz::verify::{run_suite, SuiteOptions};
use grid_lefschetz::Result;

fn main() -> Result<()> {
    let opts = SuiteOptions { max_side: Some(3), ..SuiteOptions::default() };
    let result = run_suite(FieldMode::default(), &opts, |c| println!("{}", c.line()))?;
    println!("all passed: {}  ({:.1}s)", result.passed(), result.seconds);
    Ok(())
}
