//! The 3x6 grid with d = 5: ideal dimensions of the points, the fat
//! points on the quadric, and the failure of surjectivity in degree 6.

use grid_lefschetz::ideals::{bigraded_fat_points_piece, fat_points_piece, FatPointsSpec};
use grid_lefschetz::lefschetz::wlp_test;
use grid_lefschetz::poly::{Degree, GradingSpec, PolyRing};
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    let field = PrimeField::default();
    let grid = GridConfig::new(field, 3, 6, GridParams::Random(DEFAULT_SEED))?;
    let p3 = PolyRing::new(field, GradingSpec::P3);
    let p1p1 = PolyRing::new(field, GradingSpec::P1XP1);
    let simple = FatPointsSpec::grid(&grid, 1)?;
    for t in 3..=6 {
        println!("dim [I_X]_{t} = {}", fat_points_piece(&p3, &simple, Degree::Total(t))?.dim());
    }
    let double = FatPointsSpec::grid(&grid, 2)?;
    println!("dim [I_X^(2)]_6 = {}", fat_points_piece(&p3, &double, Degree::Total(6))?.dim());
    let on_q = FatPointsSpec::bigraded_grid(&grid, 2)?;
    println!("dim [I_Z^(2)]_(6,6) = {}", bigraded_fat_points_piece(&p1p1, &on_q, 6, 6)?.dim());

    let report = wlp_test(&grid, 5, 3, DEFAULT_SEED)?;
    for r in &report.degrees {
        println!("t={:<2} {:>3} -> {:<3} rank {:<3} coker {}", r.t, r.dim_from, r.dim_to, r.rank, r.coker_dim);
    }
    println!("failing degrees {:?}", report.failing);
    Ok(())
}
