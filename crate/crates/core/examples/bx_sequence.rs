//! The 0/1 sequence `b_d` of WLP verdicts for `d = 1, 2, ...`.

use grid_lefschetz::lefschetz::bx_sequence;
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    for (a, b, d_max) in [(2, 2, 4), (3, 3, 6), (4, 4, 9), (3, 4, 6), (3, 5, 6)] {
        let grid = GridConfig::new(PrimeField::default(), a, b, GridParams::Random(DEFAULT_SEED))?;
        let bits = bx_sequence(&grid, d_max, 3, DEFAULT_SEED)?;
        println!("{a}x{b}  b_1..b_{d_max} = {}", bits.bit_string());
    }
    Ok(())
}
