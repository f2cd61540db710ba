//! Weak Lefschetz verdicts on square grids against the rule
//! "WLP iff d <= a-1 or (a-1) divides d".

use grid_lefschetz::lefschetz::wlp_test;
use grid_lefschetz::predict::square_grid_wlp_verdict;
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    for a in 3..=4 {
        let grid = GridConfig::new(PrimeField::default(), a, a, GridParams::Random(DEFAULT_SEED))?;
        println!("{a}x{a}");
        for d in 1..=3 * (a - 1) {
            let report = wlp_test(&grid, d, 3, DEFAULT_SEED)?;
            let predicted = square_grid_wlp_verdict(a as i64, d as i64);
            println!("  d={d:<2} WLP {:<5} predicted {:<5} failing {:?}", report.verdict, predicted, report.failing);
        }
    }
    Ok(())
}
