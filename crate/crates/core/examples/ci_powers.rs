//! A grid projected from a general point is a complete intersection of
//! type (a, b) in the plane; the powers of its ideal have dimensions given
//! by their Koszul-type resolution.

use grid_lefschetz::geometry::{project_from_point, projected_ci_forms, Locus, Projection};
use grid_lefschetz::ideals::{ci_power_dim_formula, CiPowerIdeal, GradedIdeal};
use grid_lefschetz::poly::{GradingSpec, PolyRing};
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    let field = PrimeField::default();
    let plane = PolyRing::new(field, GradingSpec::P2);
    for (a, b) in [(3, 3), (3, 4)] {
        let grid = GridConfig::new(field, a, b, GridParams::Random(DEFAULT_SEED))?;
        let mut rng = DEFAULT_SEED.stream("projection", 0);
        let center = grid.sample_point(Locus::Generic, &mut rng)?;
        let projection = Projection::to_random_plane(field, center, &mut rng)?;
        println!("{a}x{b}: {} distinct image points", project_from_point(&grid, &projection)?.len());
        let (f, g) = projected_ci_forms(&grid, &projection, &plane)?;
        for m in 1..=3 {
            let ideal = CiPowerIdeal::new(plane.clone(), &f, &g, m)?;
            let row: Vec<String> = (0..=10)
                .map(|t| ideal.piece_dim(t).map(|dim| format!("{dim}/{}", ci_power_dim_formula(a as i64, b as i64, m as i64, t as i64))))
                .collect::<Result<_>>()?;
            println!("  m={m} dim/formula t=0..10: {}", row.join(" "));
        }
    }
    Ok(())
}
