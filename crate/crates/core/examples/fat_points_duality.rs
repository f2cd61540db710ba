//! Inverse-system duality: `dim [R/(l_P^d)]_t` equals the number of forms
//! of degree `t` vanishing to order `t-d+1` at every grid point.

use grid_lefschetz::ideals::macaulay_dual_check;
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    for (a, b) in [(2, 3), (3, 3), (3, 4)] {
        let grid = GridConfig::new(PrimeField::default(), a, b, GridParams::Random(DEFAULT_SEED))?;
        for d in 2..=4 {
            let row: Vec<String> = (d..=d + 3)
                .map(|t| macaulay_dual_check(&grid, d, t).map(|c| format!("{}={}", c.lhs, c.rhs)))
                .collect::<Result<_>>()?;
            println!("{a}x{b} d={d}  t={d}..{}: {}", d + 3, row.join(" "));
        }
    }
    Ok(())
}
