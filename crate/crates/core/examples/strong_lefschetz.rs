//! Multiplication by powers `l^k` of a general form, the strong Lefschetz
//! question, on small square grids.

use grid_lefschetz::lefschetz::slp_probe;
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    for a in 2..=3 {
        let grid = GridConfig::new(PrimeField::default(), a, a, GridParams::Random(DEFAULT_SEED))?;
        for d in 1..=4 {
            let verdicts: Vec<String> = (1..=4)
                .map(|k| {
                    slp_probe(&grid, d, k, 3, DEFAULT_SEED).map(|r| {
                        if r.report.verdict {
                            format!("k={k}:yes")
                        } else {
                            format!("k={k}:no{:?}", r.report.failing)
                        }
                    })
                })
                .collect::<Result<_>>()?;
            println!("{a}x{a} d={d}  maximal rank for l^k: {}", verdicts.join(" "));
        }
    }
    Ok(())
}
