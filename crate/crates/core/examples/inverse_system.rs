//! The inverse system `K_t = I_t^perp` of `(l_P^d)` under contraction:
//! its dimensions are the Hilbert function of the quotient, and the rank
//! of a form acting on the quotient is the rank of contraction on `K`.

use grid_lefschetz::ideals::{GradedIdeal, PowersIdealSpec};
use grid_lefschetz::inverse::{InverseSystem, Route};
use grid_lefschetz::{GridConfig, GridParams, Locus, PrimeField, Result, DEFAULT_SEED};

fn main() -> Result<()> {
    let grid = GridConfig::new(PrimeField::default(), 4, 4, GridParams::Random(DEFAULT_SEED))?;
    let spec = PowersIdealSpec::new(grid.clone(), 5)?;
    let system = InverseSystem::of_powers(&spec)?;
    let ring = spec.ring();
    let l = grid.sample_form(Locus::Generic, &mut DEFAULT_SEED.stream("form", 0))?;
    let form = ring.linear_form(&l)?;
    let square = ring.linear_power(&l, 2)?;
    println!("{:>3} {:>5} {:>11} {:>8} {:>9}", "t", "dim", "route", "rank l", "rank l^2");
    for t in 0..=system.top() {
        let route = match system.route(t) {
            Some(Route::Generators) => "generators",
            Some(Route::Lift) => "lift",
            None => "-",
        };
        println!("{t:>3} {:>5} {route:>11} {:>8} {:>9}", system.dim(t)?, system.mult_rank(&form, t)?, system.mult_rank(&square, t)?);
    }
    Ok(())
}
