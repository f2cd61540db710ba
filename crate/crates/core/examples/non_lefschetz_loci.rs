//! Forms dual to special points of the 3x3 grid: where they lose rank
//! compared with a general form.

use grid_lefschetz::lefschetz::non_lefschetz_probe;
use grid_lefschetz::{GridConfig, GridParams, Locus, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    let grid = GridConfig::new(PrimeField::default(), 3, 3, GridParams::Random(DEFAULT_SEED))?;
    let cases = [
        (2, Locus::Plane(0, 0)),
        (4, Locus::Generic),
        (4, Locus::Plane(1, 1)),
        (4, Locus::Lambda(0)),
        (4, Locus::Mu(2)),
        (4, Locus::Chord((0, 1), (1, 0))),
        (6, Locus::Plane(0, 0)),
    ];
    for (d, locus) in cases {
        let r = non_lefschetz_probe(&grid, d, locus, 3, DEFAULT_SEED)?;
        let detail: Vec<String> = r
            .degrees
            .iter()
            .map(|p| format!("t={} rank {}/{} coker {}", p.t, p.locus_rank, p.generic_rank, p.locus_coker))
            .collect();
        println!("d={d} {locus:<14} loses rank: {:<5} {}", r.in_non_lefschetz_locus, detail.join(", "));
    }
    Ok(())
}
