//! Powers of the quadric through a grid and their annihilators: the
//! quotient by `Ann(Q^t)` is a compressed Gorenstein algebra, and its
//! ideal agrees with the powers of the forms dual to a large enough grid.

use grid_lefschetz::ideals::{hilbert_table, powers_ideal_piece, HilbertKind, PerpIdeal, PowersIdealSpec};
use grid_lefschetz::poly::{Degree, GradingSpec, PolyRing};
use grid_lefschetz::predict::compressed_gorenstein_hf;
use grid_lefschetz::{GridConfig, GridParams, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    let field = PrimeField::default();
    let ring = PolyRing::new(field, GradingSpec::P3);
    for t in 1..=3 {
        let grid = GridConfig::new(field, t + 2, t + 2, GridParams::Random(DEFAULT_SEED))?;
        let q = grid.quadric(&ring)?;
        let perp = PerpIdeal::new(ring.clone(), ring.pow(&q, t)?)?;
        let table = hilbert_table(&perp, 2 * t + 1, HilbertKind::Quotient)?;
        let expected = compressed_gorenstein_hf(t);
        let powers = PowersIdealSpec::new(grid, t + 1)?;
        let same_ideal = (0..=2 * t + 1).all(|s| {
            let perp_dim = ring.dim(Degree::Total(s)) - table.get(s).unwrap_or(0);
            powers_ideal_piece(&powers, s).map(|p| p.dim() == perp_dim).unwrap_or(false)
        });
        println!("t={t}: h = {:?} compressed {:?}  Ann(Q^t) = powers of degree {}: {same_ideal}", table.dims, expected.dims, t + 1);
    }
    Ok(())
}
