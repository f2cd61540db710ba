//! Hilbert functions of `R / (l_P^d : P in X)` for a few grids, with the
//! first difference.

use grid_lefschetz::lefschetz::artinian_dual;
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    for (a, b, d) in [(3, 3, 2), (3, 3, 4), (4, 4, 3), (3, 6, 5)] {
        let grid = GridConfig::new(PrimeField::default(), a, b, GridParams::Random(DEFAULT_SEED))?;
        let (_, system) = artinian_dual(&grid, d)?;
        let table = system.hilbert_table();
        let dims: Vec<String> = table.rows().iter().map(|r| r.dim.to_string()).collect();
        let deltas: Vec<String> = table.rows().iter().map(|r| r.delta.to_string()).collect();
        println!("{a}x{b} d={d}\n  h     {}\n  delta {}", dims.join(" "), deltas.join(" "));
    }
    Ok(())
}
