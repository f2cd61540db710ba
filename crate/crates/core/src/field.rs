//! Exact scalar arithmetic: prime fields with word-sized moduli and the
//! rationals.
//!
//! Everything downstream is generic over [`Field`]. The prime field is the
//! workhorse; the rational field exists to cross-check small instances in
//! true characteristic zero.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Upper end of the integer range used for random draws in rational mode.
pub const RATIONAL_DRAW_MAX: i64 = 1_000_000;

pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem>;

    /// Uniform over the nonzero residues (prime mode) or over the integers
    /// `1..=RATIONAL_DRAW_MAX` (rational mode).
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// The characteristic, or `None` for characteristic zero.
    fn characteristic(&self) -> Option<u64>;

    fn to_json(&self, x: &Self::Elem) -> serde_json::Value;

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    fn pow(&self, x: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `dst += factor * src`, elementwise.
    fn axpy(&self, dst: &mut [Self::Elem], factor: &Self::Elem, src: &[Self::Elem]) {
        debug_assert_eq!(dst.len(), src.len());
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.is_zero(s) {
                *d = self.add(d, &self.mul(factor, s));
            }
        }
    }

    fn scale(&self, row: &mut [Self::Elem], factor: &Self::Elem) {
        for x in row.iter_mut() {
            if !self.is_zero(x) {
                *x = self.mul(x, factor);
            }
        }
    }

    /// Row reduction of a row-major `rows x cols` matrix, see
    /// [`crate::linalg::echelon_generic`]. Returns the pivot columns.
    fn echelon(&self, data: &mut [Self::Elem], rows: usize, cols: usize, reduced: bool) -> Vec<usize> {
        crate::linalg::echelon_generic(self, data, rows, cols, reduced)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith<F: Field>(field: &F, x: &F::Elem, y: &F::Elem, op: ArithOp) -> Result<F::Elem> {
    match op {
        ArithOp::Add => Ok(field.add(x, y)),
        ArithOp::Sub => Ok(field.sub(x, y)),
        ArithOp::Mul => Ok(field.mul(x, y)),
        ArithOp::Div => field.div(x, y),
    }
}

/// A prime below 2^32, so that residues fit in `u32` and products in `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Checks `p > 2 * size^4`, the bound that keeps grid constructions of
    /// the given size from colliding mod p.
    pub fn check_grid_size(self, size: u64) -> Result<()> {
        let bound = 2 * size.pow(4);
        if self.0 <= bound {
            return Err(Error::PrimeTooSmall { p: self.0, bound, size });
        }
        Ok(())
    }
}

impl Default for PrimeModulus {
    fn default() -> Self {
        PrimeModulus(DEFAULT_PRIME)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut k = 3u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

/// `Z/p` with Barrett reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
    // floor(2^64 / p)
    barrett: u64,
}

impl PrimeField {
    pub fn new(modulus: PrimeModulus) -> Self {
        let p = modulus.get();
        let barrett = (u128::from(u64::MAX) + 1).div_euclid(u128::from(p)) as u64;
        PrimeField { p, barrett }
    }

    pub fn modulus(&self) -> PrimeModulus {
        PrimeModulus(self.p)
    }

    #[inline(always)]
    fn reduce(&self, x: u64) -> u32 {
        let q = ((u128::from(x) * u128::from(self.barrett)) >> 64) as u64;
        let mut r = x - q * self.p;
        if r >= self.p {
            r -= self.p;
        }
        r as u32
    }

    pub fn elem(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField::new(PrimeModulus::default())
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn from_i64(&self, n: i64) -> u32 {
        self.elem(n)
    }

    #[inline]
    fn add(&self, x: &u32, y: &u32) -> u32 {
        let s = u64::from(*x) + u64::from(*y);
        if s >= self.p {
            (s - self.p) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    fn sub(&self, x: &u32, y: &u32) -> u32 {
        if x >= y {
            x - y
        } else {
            (u64::from(*x) + self.p - u64::from(*y)) as u32
        }
    }

    #[inline]
    fn mul(&self, x: &u32, y: &u32) -> u32 {
        self.reduce(u64::from(*x) * u64::from(*y))
    }

    fn neg(&self, x: &u32) -> u32 {
        if *x == 0 {
            0
        } else {
            (self.p - u64::from(*x)) as u32
        }
    }

    fn is_zero(&self, x: &u32) -> bool {
        *x == 0
    }

    fn inv(&self, x: &u32) -> Result<u32> {
        if *x == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat
        Ok(self.pow(x, self.p - 2))
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(1..self.p) as u32
    }

    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }

    fn to_json(&self, x: &u32) -> serde_json::Value {
        serde_json::Value::from(*x)
    }

    #[inline]
    fn axpy(&self, dst: &mut [u32], factor: &u32, src: &[u32]) {
        let f = u64::from(*factor);
        if f == 0 {
            return;
        }
        for (d, s) in dst.iter_mut().zip(src) {
            *d = self.reduce(u64::from(*d) + f * u64::from(*s));
        }
    }

    fn scale(&self, row: &mut [u32], factor: &u32) {
        let f = u64::from(*factor);
        for x in row.iter_mut() {
            *x = self.reduce(u64::from(*x) * f);
        }
    }
}

/// The rationals, as exact big rationals in lowest terms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }

    fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x - y
    }

    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }

    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }

    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }

    fn inv(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(x.recip())
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(1..=RATIONAL_DRAW_MAX))
    }

    fn characteristic(&self) -> Option<u64> {
        None
    }

    /// Fraction-free elimination on integer rows, dividing each row by the
    /// gcd of its entries after every update and by its pivot at the end.
    fn echelon(&self, data: &mut [BigRational], rows: usize, cols: usize, reduced: bool) -> Vec<usize> {
        let mut m: Vec<Vec<BigInt>> = data.chunks(cols).map(integer_row).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            // the smallest pivot keeps the entries short
            let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].bits()) else {
                continue;
            };
            m.swap(p, r);
            let (head, tail) = m.split_at_mut(r + 1);
            for row in tail.iter_mut().filter(|row| !row[c].is_zero()) {
                eliminate(row, &head[r], c);
            }
            pivots.push(c);
            r += 1;
        }
        if reduced {
            for k in (0..r).rev() {
                let (head, tail) = m.split_at_mut(k);
                for row in head.iter_mut().filter(|row| !row[pivots[k]].is_zero()) {
                    eliminate(row, &tail[0], pivots[k]);
                }
            }
        }
        for (i, row) in m.into_iter().enumerate() {
            let out = &mut data[i * cols..(i + 1) * cols];
            match (reduced, pivots.get(i)) {
                (true, Some(&c)) => {
                    let p = row[c].clone();
                    for (x, n) in out.iter_mut().zip(row) {
                        *x = BigRational::new(n, p.clone());
                    }
                }
                _ => {
                    for (x, n) in out.iter_mut().zip(row) {
                        *x = BigRational::from_integer(n);
                    }
                }
            }
        }
        pivots
    }

    fn to_json(&self, x: &BigRational) -> serde_json::Value {
        if x.is_integer() {
            if let Some(n) = x.numer().to_i64() {
                return serde_json::Value::from(n);
            }
        }
        let sign = if x.is_negative() { "-" } else { "" };
        serde_json::Value::from(format!("{sign}{}/{}", x.numer().abs(), x.denom()))
    }
}

/// The row scaled to coprime integer entries.
fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    remove_content(&mut out);
    out
}

fn remove_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if !g.is_zero() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `row = p * row - a * pivot` with `p`, `a` the entries in column `c`
/// divided by their gcd, which clears that column.
fn eliminate(row: &mut [BigInt], pivot: &[BigInt], c: usize) {
    let g = row[c].gcd(&pivot[c]);
    let a = &row[c] / &g;
    let p = &pivot[c] / &g;
    for (x, y) in row.iter_mut().zip(pivot) {
        if !y.is_zero() {
            *x = &*x * &p - &a * y;
        } else if !x.is_zero() && !p.is_one() {
            *x *= &p;
        }
    }
    remove_content(row);
}

/// Root seed from which all named random streams are derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RandomSeed(pub u64);

pub const DEFAULT_SEED: RandomSeed = RandomSeed(0xC0FFEE);

impl RandomSeed {
    /// An independent generator for the stream `(name, index)`. Streams do
    /// not depend on the order in which they are requested.
    pub fn stream(self, name: &str, index: u64) -> ChaCha8Rng {
        let mut h = 0xcbf2_9ce4_8422_2325u64;
        for b in name.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        let mixed = splitmix64(splitmix64(self.0 ^ h) ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        ChaCha8Rng::seed_from_u64(mixed)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Draws `n` pairwise distinct nonzero scalars.
pub fn distinct_scalars<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R, n: usize) -> Vec<F::Elem> {
    let mut out: Vec<F::Elem> = Vec::with_capacity(n);
    while out.len() < n {
        let x = field.random_nonzero(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> PrimeField {
        PrimeField::new(PrimeModulus::new(7).unwrap())
    }

    #[test]
    fn small_prime_arith() {
        let f = f7();
        assert_eq!(field_arith(&f, &1, &2, ArithOp::Div).unwrap(), 4);
        assert_eq!(field_arith(&f, &3, &5, ArithOp::Add).unwrap(), 1);
        assert_eq!(field_arith(&f, &3, &5, ArithOp::Sub).unwrap(), 5);
        assert_eq!(field_arith(&f, &3, &5, ArithOp::Mul).unwrap(), 1);
        assert_eq!(f.from_i64(-1), 6);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = f7();
        assert_eq!(field_arith(&f, &3, &0, ArithOp::Div), Err(Error::DivisionByZero));
        let q = RationalField;
        assert_eq!(q.inv(&q.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_division_is_exact() {
        let q = RationalField;
        let third = field_arith(&q, &q.one(), &q.from_i64(3), ArithOp::Div).unwrap();
        assert_eq!(third, BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(q.to_json(&third), serde_json::json!("1/3"));
        assert_eq!(q.to_json(&q.from_i64(-4)), serde_json::json!(-4));
    }

    #[test]
    fn modulus_validation() {
        assert_eq!(PrimeModulus::new(91), Err(Error::NotPrime(91)));
        assert!(matches!(PrimeModulus::new(1 << 33), Err(Error::ModulusTooLarge(_))));
        let p = PrimeModulus::new(101).unwrap();
        assert!(matches!(p.check_grid_size(3), Err(Error::PrimeTooSmall { bound: 162, .. })));
        assert!(PrimeModulus::default().check_grid_size(6).is_ok());
    }

    #[test]
    fn seeded_streams_are_reproducible() {
        let f = PrimeField::default();
        let draw = |seed: u64, name: &str| {
            let mut rng = RandomSeed(seed).stream(name, 0);
            (0..4).map(|_| f.random_nonzero(&mut rng)).collect::<Vec<_>>()
        };
        assert_eq!(draw(1, "form"), draw(1, "form"));
        assert_ne!(draw(1, "form"), draw(2, "form"));
        assert_ne!(draw(1, "form"), draw(1, "grid"));
    }

    #[test]
    fn rational_draws_stay_in_range() {
        let q = RationalField;
        let mut rng = RandomSeed(9).stream("x", 0);
        for _ in 0..200 {
            let x = q.random_nonzero(&mut rng);
            assert!(x.is_integer());
            let n = x.numer().to_i64().unwrap();
            assert!((1..=RATIONAL_DRAW_MAX).contains(&n));
        }
    }

    #[test]
    fn barrett_matches_naive_near_the_top() {
        let f = PrimeField::default();
        let p = DEFAULT_PRIME;
        for &(a, b) in &[(p - 1, p - 1), (p - 1, 2), (123_456_789, 987_654_321), (0, p - 1)] {
            assert_eq!(u64::from(f.mul(&(a as u32), &(b as u32))), a * b % p);
        }
        let big = PrimeField::new(PrimeModulus::new(4_294_967_291).unwrap());
        let q = 4_294_967_291u64;
        assert_eq!(u64::from(big.mul(&((q - 1) as u32), &((q - 1) as u32))), 1);
    }

    proptest! {
        #[test]
        fn inverse_times_self_is_one(x in 1u32..(DEFAULT_PRIME as u32)) {
            let f = PrimeField::default();
            let inv = f.div(&1, &x).unwrap();
            prop_assert_eq!(f.mul(&x, &inv), 1);
        }

        #[test]
        fn axpy_agrees_with_scalar_ops(
            dst in proptest::collection::vec(0u32..(DEFAULT_PRIME as u32), 8),
            src in proptest::collection::vec(0u32..(DEFAULT_PRIME as u32), 8),
            k in 0u32..(DEFAULT_PRIME as u32),
        ) {
            let f = PrimeField::default();
            let mut fast = dst.clone();
            f.axpy(&mut fast, &k, &src);
            let slow: Vec<u32> = dst.iter().zip(&src).map(|(d, s)| f.add(d, &f.mul(&k, s))).collect();
            prop_assert_eq!(fast, slow);
        }
    }
}
