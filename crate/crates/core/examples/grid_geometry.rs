//! Grid points on the quadric `x1 x4 = x2 x3`, tangent planes, and
//! projections of the grid to a plane.

use grid_lefschetz::geometry::{is_ci_hilbert, project_from_point, Locus, Projection};
use grid_lefschetz::poly::{GradingSpec, PolyRing};
use grid_lefschetz::{GridConfig, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    let field = PrimeField::default();
    let grid = GridConfig::from_ints(field, &[1, 2, 3], &[1, 2, 5])?;
    let ring = PolyRing::new(field, GradingSpec::P3);
    let q = grid.quadric(&ring)?;
    for (i, j) in grid.indices() {
        let p = grid.point(i, j);
        let on_q = ring.eval(&q, &p)? == 0;
        let plane = grid.tangent_plane(i, j);
        println!("P{}{} = {p:?}  on Q: {on_q}  grid points on its tangent plane: {}", i + 1, j + 1, grid.points_on_plane(&plane).len());
    }

    let mut rng = DEFAULT_SEED.stream("projection", 0);
    for locus in [Locus::Generic, Locus::Lambda(0), Locus::Plane(0, 0)] {
        let center = grid.sample_point(locus, &mut rng)?;
        let projection = Projection::to_random_plane(field, center, &mut rng)?;
        let image = project_from_point(&grid, &projection)?;
        println!(
            "center on {locus}: {} image points, {} collisions, complete intersection (3,3): {}",
            image.len(),
            image.collisions().len(),
            is_ci_hilbert(&field, &image, 3, 3)?
        );
    }
    Ok(())
}
