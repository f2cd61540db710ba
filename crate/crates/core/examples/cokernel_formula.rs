//! Cokernels of a general linear form into degree `d+t`, measured and
//! from the closed form `sum_{i=0}^{t+1} C(d+t+2-a(t+1)-(b-a)i, 2)`.

use grid_lefschetz::lefschetz::generic_cokernels;
use grid_lefschetz::predict::coker_formula_geproci;
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    for (a, b) in [(3, 3), (4, 4), (3, 4), (3, 6)] {
        let grid = GridConfig::new(PrimeField::default(), a, b, GridParams::Random(DEFAULT_SEED))?;
        for d in a..=a + 3 {
            let degrees: Vec<usize> = (d..=d + 3).collect();
            let measured = generic_cokernels(&grid, d, &degrees, 3, DEFAULT_SEED)?;
            let row: Vec<String> = (0..=3)
                .zip(&measured)
                .map(|(t, m)| match coker_formula_geproci(a as i64, b as i64, d as i64, t) {
                    Some(p) => format!("{m}/{p}"),
                    None => format!("{m}/-"),
                })
                .collect();
            println!("{a}x{b} d={d}  measured/predicted at t=d..d+3: {}", row.join("  "));
        }
    }
    Ok(())
}
