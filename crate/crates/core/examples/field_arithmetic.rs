//! Scalars in a prime field and in the rationals, and seeded random draws.

use grid_lefschetz::field::{field_arith, ArithOp, Field, PrimeField, PrimeModulus, RationalField, DEFAULT_SEED};
use grid_lefschetz::Result;

fn main() -> Result<()> {
    let small = PrimeField::new(PrimeModulus::new(101)?);
    let (x, y) = (small.from_i64(7), small.from_i64(-3));
    for op in [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div] {
        let z = field_arith(&small, &x, &y, op)?;
        println!("F_101: 7 {op:?} -3 = {}", small.to_json(&z));
    }
    println!("F_101: 1/0 -> {:?}", small.inv(&small.zero()).unwrap_err());

    let q = RationalField;
    let third = q.div(&q.one(), &q.from_i64(3))?;
    println!("Q: 1/3 + 1/3 = {}", q.to_json(&q.add(&third, &third)));

    // the same named stream gives the same draws
    let p = PrimeField::default();
    let mut a = DEFAULT_SEED.stream("grid", 0);
    let mut b = DEFAULT_SEED.stream("grid", 0);
    let draws: Vec<_> = (0..3).map(|_| p.random_nonzero(&mut a)).collect();
    let again: Vec<_> = (0..3).map(|_| p.random_nonzero(&mut b)).collect();
    println!("draws {draws:?} repeat: {}", draws == again);
    let mut r = DEFAULT_SEED.stream("grid", 0);
    println!("rational draws {:?}", (0..3).map(|_| q.to_json(&q.random_nonzero(&mut r))).collect::<Vec<_>>());
    Ok(())
}
