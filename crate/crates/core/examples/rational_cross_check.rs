//! The same 3x3 computations in a prime field and over the rationals.

use grid_lefschetz::lefschetz::wlp_test;
use grid_lefschetz::{Field, GridConfig, GridParams, PrimeField, RationalField, Result, DEFAULT_SEED};

fn summary<F: Field>(field: F, d: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let grid = GridConfig::new(field, 3, 3, GridParams::Random(DEFAULT_SEED))?;
    let r = wlp_test(&grid, d, 3, DEFAULT_SEED)?;
    Ok((r.degrees.iter().map(|x| x.dim_to).collect(), r.degrees.iter().map(|x| x.rank).collect()))
}

fn main() -> Result<()> {
    for d in 1..=5 {
        let p = summary(PrimeField::default(), d)?;
        let q = summary(RationalField, d)?;
        println!("d={d} dims {:?}\n    ranks {:?}\n    rational agrees: {}", p.0, p.1, p == q);
    }
    Ok(())
}
