//! Monomial bases of graded and bigraded pieces, dense homogeneous
//! polynomials over those bases, and the apolarity action.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;

/// Largest number of variables any grading uses.
pub const MAX_VARS: usize = 4;

/// Total degree in `nvars` variables, or the bigrading of `k[x0,x1,y0,y1]`
/// with `deg x_i = (1,0)` and `deg y_i = (0,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GradingSpec {
    Total { nvars: usize },
    Bigraded,
}

impl GradingSpec {
    /// `k[x1..x4]`, the coordinate ring of P^3.
    pub const P3: GradingSpec = GradingSpec::Total { nvars: 4 };
    /// `k[x1..x3]`, the coordinate ring of P^2.
    pub const P2: GradingSpec = GradingSpec::Total { nvars: 3 };
    pub const P1XP1: GradingSpec = GradingSpec::Bigraded;

    pub fn nvars(self) -> usize {
        match self {
            GradingSpec::Total { nvars } => nvars,
            GradingSpec::Bigraded => 4,
        }
    }

    pub fn dim(self, deg: Degree) -> usize {
        match (self, deg) {
            (GradingSpec::Total { nvars }, Degree::Total(t)) => binom(t + nvars - 1, nvars - 1),
            (GradingSpec::Bigraded, Degree::Bi(u, v)) => (u + 1) * (v + 1),
            _ => 0,
        }
    }

    pub fn accepts(self, deg: Degree) -> bool {
        matches!(
            (self, deg),
            (GradingSpec::Total { .. }, Degree::Total(_)) | (GradingSpec::Bigraded, Degree::Bi(..))
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Degree {
    Total(usize),
    Bi(usize, usize),
}

impl Degree {
    pub fn checked_add(self, other: Degree) -> Option<Degree> {
        match (self, other) {
            (Degree::Total(a), Degree::Total(b)) => Some(Degree::Total(a + b)),
            (Degree::Bi(a, b), Degree::Bi(c, d)) => Some(Degree::Bi(a + c, b + d)),
            _ => None,
        }
    }

    pub fn checked_sub(self, other: Degree) -> Option<Degree> {
        match (self, other) {
            (Degree::Total(a), Degree::Total(b)) => a.checked_sub(b).map(Degree::Total),
            (Degree::Bi(a, b), Degree::Bi(c, d)) => Some(Degree::Bi(a.checked_sub(c)?, b.checked_sub(d)?)),
            _ => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Total(t) => write!(f, "{t}"),
            Degree::Bi(u, v) => write!(f, "({u},{v})"),
        }
    }
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Exponent vector. Unused trailing slots are zero. In the bigraded ring
/// the slots are `(x0, x1, y0, y1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub fn degree(&self, spec: GradingSpec) -> Degree {
        let e = self.0;
        match spec {
            GradingSpec::Total { .. } => Degree::Total(e.iter().map(|&x| x as usize).sum()),
            GradingSpec::Bigraded => Degree::Bi((e[0] + e[1]) as usize, (e[2] + e[3]) as usize),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x = x.checked_sub(y)?;
        }
        Some(Monomial(e))
    }
}

/// The monomials of one graded piece in graded-lex order
/// (`x1 > x2 > x3 > x4`, resp. `x0 > x1 > y0 > y1`).
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    spec: GradingSpec,
    degree: Degree,
    monomials: Vec<Monomial>,
    lookup: Vec<u32>,
}

impl MonomialBasis {
    pub fn new(spec: GradingSpec, degree: Degree) -> Result<Self> {
        if !spec.accepts(degree) {
            return Err(Error::GradingMismatch(format!("{spec:?} has no degree {degree}")));
        }
        let mut monomials = Vec::with_capacity(spec.dim(degree));
        match (spec, degree) {
            (GradingSpec::Total { nvars }, Degree::Total(t)) => {
                let mut e = [0u16; MAX_VARS];
                lex_fill(nvars, 0, t, &mut e, &mut monomials);
            }
            (GradingSpec::Bigraded, Degree::Bi(u, v)) => {
                for i in (0..=u).rev() {
                    for j in (0..=v).rev() {
                        monomials.push(Monomial([i as u16, (u - i) as u16, j as u16, (v - j) as u16]));
                    }
                }
            }
            _ => unreachable!(),
        }
        let mut basis = MonomialBasis { spec, degree, monomials, lookup: Vec::new() };
        if let GradingSpec::Total { nvars } = spec {
            let Degree::Total(t) = degree else { unreachable!() };
            let side = t + 1;
            basis.lookup = vec![u32::MAX; side.pow(nvars as u32 - 1)];
            for (i, m) in basis.monomials.iter().enumerate() {
                let key = Self::key(&m.0, nvars, side);
                basis.lookup[key] = i as u32;
            }
        }
        Ok(basis)
    }

    fn key(e: &[u16; MAX_VARS], nvars: usize, side: usize) -> usize {
        e[..nvars - 1].iter().fold(0, |acc, &x| acc * side + x as usize)
    }

    pub fn spec(&self) -> GradingSpec {
        self.spec
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> Monomial {
        self.monomials[i]
    }

    /// Position of `m`, or `None` if it is not in this piece.
    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        if m.degree(self.spec) != self.degree {
            return None;
        }
        match (self.spec, self.degree) {
            (GradingSpec::Total { nvars }, Degree::Total(t)) => {
                let i = self.lookup[Self::key(&m.0, nvars, t + 1)];
                (i != u32::MAX).then_some(i as usize)
            }
            (GradingSpec::Bigraded, Degree::Bi(u, v)) => {
                Some((u - m.0[0] as usize) * (v + 1) + (v - m.0[2] as usize))
            }
            _ => None,
        }
    }
}

fn lex_fill(nvars: usize, var: usize, remaining: usize, e: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
    if var + 1 == nvars {
        e[var] = remaining as u16;
        out.push(Monomial(*e));
        return;
    }
    for k in (0..=remaining).rev() {
        e[var] = k as u16;
        lex_fill(nvars, var + 1, remaining - k, e, out);
    }
    e[var] = 0;
}

/// A homogeneous polynomial, stored densely over the monomial basis of its
/// degree.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyVector<F: Field> {
    pub grading: GradingSpec,
    pub degree: Degree,
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> PolyVector<F> {
    pub fn is_zero(&self, field: &F) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }

    pub fn total_degree(&self) -> Result<usize> {
        match self.degree {
            Degree::Total(t) => Ok(t),
            d => Err(Error::GradingMismatch(format!("expected a total degree, got {d}"))),
        }
    }
}

/// A polynomial ring with one grading, holding the scalar field and a cache
/// of monomial bases.
#[derive(Debug, Clone)]
pub struct PolyRing<F: Field> {
    field: F,
    grading: GradingSpec,
    bases: Arc<Mutex<HashMap<Degree, Arc<MonomialBasis>>>>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, grading: GradingSpec) -> Self {
        PolyRing { field, grading, bases: Arc::default() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn grading(&self) -> GradingSpec {
        self.grading
    }

    pub fn nvars(&self) -> usize {
        self.grading.nvars()
    }

    pub fn dim(&self, deg: Degree) -> usize {
        self.grading.dim(deg)
    }

    /// `dim` of the total-degree piece, zero for negative degrees.
    pub fn dim_total(&self, t: i64) -> usize {
        if t < 0 {
            0
        } else {
            self.grading.dim(Degree::Total(t as usize))
        }
    }

    pub fn basis(&self, deg: Degree) -> Result<Arc<MonomialBasis>> {
        if let Some(b) = self.bases.lock().unwrap().get(&deg) {
            return Ok(Arc::clone(b));
        }
        let b = Arc::new(MonomialBasis::new(self.grading, deg)?);
        self.bases.lock().unwrap().insert(deg, Arc::clone(&b));
        Ok(b)
    }

    pub fn graded_basis(&self, deg: Degree) -> Result<Vec<Monomial>> {
        Ok(self.basis(deg)?.monomials().to_vec())
    }

    pub fn zero(&self, deg: Degree) -> Result<PolyVector<F>> {
        let n = self.basis(deg)?.len();
        Ok(PolyVector { grading: self.grading, degree: deg, coeffs: vec![self.field.zero(); n] })
    }

    pub fn one(&self) -> PolyVector<F> {
        let deg = match self.grading {
            GradingSpec::Total { .. } => Degree::Total(0),
            GradingSpec::Bigraded => Degree::Bi(0, 0),
        };
        PolyVector { grading: self.grading, degree: deg, coeffs: vec![self.field.one()] }
    }

    pub fn from_terms(&self, deg: Degree, terms: &[(Monomial, F::Elem)]) -> Result<PolyVector<F>> {
        let basis = self.basis(deg)?;
        let mut p = self.zero(deg)?;
        for (m, c) in terms {
            let i = basis
                .index_of(m)
                .ok_or_else(|| Error::DegreeMismatch(format!("monomial {m:?} is not of degree {deg}")))?;
            p.coeffs[i] = self.field.add(&p.coeffs[i], c);
        }
        Ok(p)
    }

    pub fn from_int_terms(&self, deg: Degree, terms: &[([u16; MAX_VARS], i64)]) -> Result<PolyVector<F>> {
        let terms: Vec<_> = terms.iter().map(|(e, c)| (Monomial(*e), self.field.from_i64(*c))).collect();
        self.from_terms(deg, &terms)
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self, p: &PolyVector<F>) -> Result<Vec<(Monomial, F::Elem)>> {
        let basis = self.basis(p.degree)?;
        Ok(p.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (basis.get(i), c.clone()))
            .collect())
    }

    /// The linear form `sum coeffs[i] * x_i` (total grading only).
    pub fn linear_form(&self, coeffs: &[F::Elem]) -> Result<PolyVector<F>> {
        if !matches!(self.grading, GradingSpec::Total { .. }) || coeffs.len() != self.nvars() {
            return Err(Error::GradingMismatch(format!(
                "linear form with {} coefficients in {:?}",
                coeffs.len(),
                self.grading
            )));
        }
        let terms: Vec<_> = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut e = [0u16; MAX_VARS];
                e[i] = 1;
                (Monomial(e), c.clone())
            })
            .collect();
        self.from_terms(Degree::Total(1), &terms)
    }

    fn check_same(&self, p: &PolyVector<F>) -> Result<()> {
        if p.grading != self.grading {
            return Err(Error::GradingMismatch(format!("{:?} vs {:?}", p.grading, self.grading)));
        }
        Ok(())
    }

    pub fn add(&self, f: &PolyVector<F>, g: &PolyVector<F>) -> Result<PolyVector<F>> {
        self.check_same(f)?;
        self.check_same(g)?;
        if f.degree != g.degree {
            return Err(Error::DegreeMismatch(format!("{} vs {}", f.degree, g.degree)));
        }
        let coeffs = f.coeffs.iter().zip(&g.coeffs).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(PolyVector { grading: self.grading, degree: f.degree, coeffs })
    }

    pub fn scale(&self, f: &PolyVector<F>, c: &F::Elem) -> PolyVector<F> {
        let mut out = f.clone();
        for x in out.coeffs.iter_mut() {
            *x = self.field.mul(x, c);
        }
        out
    }

    pub fn mul(&self, f: &PolyVector<F>, g: &PolyVector<F>) -> Result<PolyVector<F>> {
        self.check_same(f)?;
        self.check_same(g)?;
        let deg = f.degree.checked_add(g.degree).expect("same grading");
        let target = self.basis(deg)?;
        let mut out = self.zero(deg)?;
        let gt = self.terms(g)?;
        for (mf, cf) in self.terms(f)? {
            for (mg, cg) in &gt {
                let i = target.index_of(&mf.mul(mg)).expect("product lies in the target piece");
                let prod = self.field.mul(&cf, cg);
                out.coeffs[i] = self.field.add(&out.coeffs[i], &prod);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, f: &PolyVector<F>, k: usize) -> Result<PolyVector<F>> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `(sum alpha_i x_i)^d` by the multinomial theorem.
    pub fn linear_power(&self, alpha: &[F::Elem], d: usize) -> Result<PolyVector<F>> {
        if d == 0 {
            return Err(Error::InvalidDegree("power of a linear form must be positive".into()));
        }
        let n = self.nvars();
        if alpha.len() != n || !matches!(self.grading, GradingSpec::Total { .. }) {
            return Err(Error::GradingMismatch(format!("{} coefficients for {:?}", alpha.len(), self.grading)));
        }
        if alpha.iter().all(|a| self.field.is_zero(a)) {
            return Err(Error::ZeroForm);
        }
        let f = &self.field;
        let basis = self.basis(Degree::Total(d))?;
        // powers[i][k] = alpha_i^k
        let powers: Vec<Vec<F::Elem>> = alpha
            .iter()
            .map(|a| {
                let mut row = Vec::with_capacity(d + 1);
                let mut acc = f.one();
                for _ in 0..=d {
                    row.push(acc.clone());
                    acc = f.mul(&acc, a);
                }
                row
            })
            .collect();
        let coeffs = basis
            .monomials()
            .iter()
            .map(|m| {
                let mut c = multinomial_elem(f, &m.0[..n]);
                for (i, &e) in m.0[..n].iter().enumerate() {
                    c = f.mul(&c, &powers[i][e as usize]);
                }
                c
            })
            .collect();
        Ok(PolyVector { grading: self.grading, degree: Degree::Total(d), coeffs })
    }

    /// `G` applied to `F` as a constant-coefficient differential operator,
    /// each variable acting as the matching partial derivative.
    pub fn diff_action(&self, big_f: &PolyVector<F>, g: &PolyVector<F>) -> Result<PolyVector<F>> {
        self.check_same(big_f)?;
        self.check_same(g)?;
        let deg = big_f.degree.checked_sub(g.degree).ok_or_else(|| {
            Error::DegreeMismatch(format!("operator degree {} exceeds form degree {}", g.degree, big_f.degree))
        })?;
        let target = self.basis(deg)?;
        let mut out = self.zero(deg)?;
        let f_terms = self.terms(big_f)?;
        for (mg, cg) in self.terms(g)? {
            for (mf, cf) in &f_terms {
                let Some(rest) = mf.div(&mg) else { continue };
                let c = self.field.mul(&self.field.mul(&cg, cf), &falling_elem(&self.field, mf, &mg));
                let i = target.index_of(&rest).expect("quotient lies in the target piece");
                out.coeffs[i] = self.field.add(&out.coeffs[i], &c);
            }
        }
        Ok(out)
    }

    /// Row vector over the basis of `deg`: the functional sending a form to
    /// the value at `point` of its `op`-th partial derivative.
    pub fn partial_functional(&self, deg: Degree, point: &[F::Elem], op: &Monomial) -> Result<Vec<F::Elem>> {
        let basis = self.basis(deg)?;
        let f = &self.field;
        let n = self.nvars();
        let top = basis.monomials().iter().flat_map(|m| m.0).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<F::Elem>> = point
            .iter()
            .map(|a| {
                let mut row = Vec::with_capacity(top + 1);
                let mut acc = f.one();
                for _ in 0..=top {
                    row.push(acc.clone());
                    acc = f.mul(&acc, a);
                }
                row
            })
            .collect();
        Ok(basis
            .monomials()
            .iter()
            .map(|m| {
                let Some(rest) = m.div(op) else { return f.zero() };
                let mut c = falling_elem(f, m, op);
                for i in 0..n {
                    c = f.mul(&c, &powers[i][rest.0[i] as usize]);
                }
                c
            })
            .collect())
    }

    /// Differential operators whose values at a point express order-`< m`
    /// vanishing there, in a fixed order.
    ///
    /// For a total grading these are the monomials of degree exactly
    /// `m - 1` (Euler's relation recovers the lower orders for homogeneous
    /// forms of degree at least `m - 1`). For the bigrading they are
    /// `d/dx1^i d/dy1^j` with `i + j < m`, the affine derivatives in the
    /// charts `x0 = 1`, `y0 = 1`.
    pub fn vanishing_operators(&self, m: usize) -> Result<Vec<Monomial>> {
        if m == 0 {
            return Err(Error::InvalidArgument("multiplicity must be at least 1".into()));
        }
        match self.grading {
            GradingSpec::Total { .. } => self.graded_basis(Degree::Total(m - 1)),
            GradingSpec::Bigraded => {
                let mut ops = Vec::new();
                for s in 0..m {
                    for i in (0..=s).rev() {
                        ops.push(Monomial([0, i as u16, 0, (s - i) as u16]));
                    }
                }
                Ok(ops)
            }
        }
    }

    /// Values at `point` of the partials of `f` returned by
    /// [`vanishing_operators`](Self::vanishing_operators).
    pub fn partials_at_point(&self, f: &PolyVector<F>, point: &[F::Elem], m: usize) -> Result<Vec<F::Elem>> {
        self.check_same(f)?;
        self.vanishing_operators(m)?
            .iter()
            .map(|op| {
                let row = self.partial_functional(f.degree, point, op)?;
                Ok(dot(&self.field, &row, &f.coeffs))
            })
            .collect()
    }

    pub fn eval(&self, f: &PolyVector<F>, point: &[F::Elem]) -> Result<F::Elem> {
        let row = self.partial_functional(f.degree, point, &Monomial([0; MAX_VARS]))?;
        Ok(dot(&self.field, &row, &f.coeffs))
    }
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| {
        if field.is_zero(x) || field.is_zero(y) {
            acc
        } else {
            field.add(&acc, &field.mul(x, y))
        }
    })
}

/// `prod_i m_i! / (m_i - op_i)!`, the scalar produced by differentiating
/// the monomial `m` by `op`.
fn falling_elem<F: Field>(field: &F, m: &Monomial, op: &Monomial) -> F::Elem {
    let mut c = field.one();
    for (&e, &k) in m.0.iter().zip(&op.0) {
        for j in 0..k {
            c = field.mul(&c, &field.from_i64(i64::from(e - j)));
        }
    }
    c
}

fn multinomial_elem<F: Field>(field: &F, exps: &[u16]) -> F::Elem {
    // product of binomials C(e_1 + ... + e_k, e_k), exact in u128
    let mut total = 0usize;
    let mut c = field.one();
    for &e in exps {
        total += e as usize;
        let b = binom(total, e as usize) as u128;
        c = field.mul(&c, &elem_from_u128(field, b));
    }
    c
}

pub(crate) fn elem_from_u128<F: Field>(field: &F, n: u128) -> F::Elem {
    if n <= i64::MAX as u128 {
        return field.from_i64(n as i64);
    }
    let shift = field.from_i64(1 << 32);
    let mut acc = field.zero();
    for k in (0..4).rev() {
        let limb = ((n >> (32 * k)) & 0xffff_ffff) as i64;
        acc = field.add(&field.mul(&acc, &shift), &field.from_i64(limb));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RandomSeed, RationalField};
    use proptest::prelude::*;

    fn r4() -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::default(), GradingSpec::P3)
    }

    fn quadric<F: Field>(ring: &PolyRing<F>) -> PolyVector<F> {
        ring.from_int_terms(Degree::Total(2), &[([1, 0, 0, 1], 1), ([0, 1, 1, 0], -1)]).unwrap()
    }

    #[test]
    fn basis_sizes() {
        let ring = r4();
        assert_eq!(ring.basis(Degree::Total(2)).unwrap().len(), 10);
        let p2 = PolyRing::new(PrimeField::default(), GradingSpec::P2);
        assert_eq!(p2.basis(Degree::Total(5)).unwrap().len(), 21);
        let bi = PolyRing::new(PrimeField::default(), GradingSpec::P1XP1);
        assert_eq!(bi.basis(Degree::Bi(1, 1)).unwrap().len(), 4);
        for t in 0..9 {
            assert_eq!(ring.basis(Degree::Total(t)).unwrap().len(), binom(t + 3, 3));
        }
    }

    #[test]
    fn basis_is_graded_lex_and_indexed() {
        let ring = r4();
        let b = ring.basis(Degree::Total(2)).unwrap();
        assert_eq!(b.get(0), Monomial([2, 0, 0, 0]));
        assert_eq!(b.get(1), Monomial([1, 1, 0, 0]));
        assert_eq!(b.get(9), Monomial([0, 0, 0, 2]));
        for (i, m) in b.monomials().iter().enumerate() {
            assert_eq!(b.index_of(m), Some(i));
        }
        assert_eq!(b.index_of(&Monomial([1, 0, 0, 0])), None);
        let bi = MonomialBasis::new(GradingSpec::Bigraded, Degree::Bi(2, 3)).unwrap();
        assert_eq!(bi.get(0), Monomial([2, 0, 3, 0]));
        for (i, m) in bi.monomials().iter().enumerate() {
            assert_eq!(bi.index_of(m), Some(i));
        }
    }

    #[test]
    fn products() {
        let ring = r4();
        let l = ring.linear_form(&[1, 1, 0, 0]).unwrap();
        let sq = ring.mul(&l, &l).unwrap();
        let expected = ring
            .from_int_terms(Degree::Total(2), &[([2, 0, 0, 0], 1), ([1, 1, 0, 0], 2), ([0, 2, 0, 0], 1)])
            .unwrap();
        assert_eq!(sq, expected);
        assert_eq!(ring.mul(&sq, &ring.one()).unwrap(), sq);

        let q = quadric(&ring);
        let x1 = ring.linear_form(&[1, 0, 0, 0]).unwrap();
        let expected = ring
            .from_int_terms(Degree::Total(3), &[([2, 0, 0, 1], 1), ([1, 1, 1, 0], -1)])
            .unwrap();
        assert_eq!(ring.mul(&q, &x1).unwrap(), expected);

        let other = PolyRing::new(PrimeField::default(), GradingSpec::P2);
        let y = other.linear_form(&[1, 0, 0]).unwrap();
        assert!(matches!(ring.mul(&x1, &y), Err(Error::GradingMismatch(_))));
    }

    #[test]
    fn linear_powers() {
        let ring = r4();
        let cube = ring.linear_power(&[1, 0, 0, 0], 3).unwrap();
        assert_eq!(cube, ring.from_int_terms(Degree::Total(3), &[([3, 0, 0, 0], 1)]).unwrap());
        let sq = ring.linear_power(&[1, 1, 0, 0], 2).unwrap();
        let l = ring.linear_form(&[1, 1, 0, 0]).unwrap();
        assert_eq!(sq, ring.mul(&l, &l).unwrap());
        assert!(matches!(ring.linear_power(&[1, 0, 0, 0], 0), Err(Error::InvalidDegree(_))));
        assert!(matches!(ring.linear_power(&[0, 0, 0, 0], 2), Err(Error::ZeroForm)));

        // x1^1 x2^2 x3^0 x4^1 in (2x1 + 3x2 + 5x3 + 7x4)^4: 4!/(1!2!0!1!) * 2 * 9 * 7
        let p = ring.linear_power(&[2, 3, 5, 7], 4).unwrap();
        let idx = ring.basis(Degree::Total(4)).unwrap().index_of(&Monomial([1, 2, 0, 1])).unwrap();
        assert_eq!(p.coeffs[idx], 12 * 2 * 9 * 7);
    }

    #[test]
    fn apolarity_basics() {
        let ring = r4();
        let x1 = ring.linear_form(&[1, 0, 0, 0]).unwrap();
        let x1sq = ring.mul(&x1, &x1).unwrap();
        assert_eq!(ring.diff_action(&x1sq, &x1).unwrap(), ring.scale(&x1, &2));
        assert!(matches!(ring.diff_action(&x1, &x1sq), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn quadric_killed_by_square_iff_point_on_quadric() {
        let ring = r4();
        let f = ring.field().clone();
        let q = quadric(&ring);
        let mut rng = RandomSeed(3).stream("pts", 0);
        for _ in 0..10 {
            let u = f.random_nonzero(&mut rng);
            let v = f.random_nonzero(&mut rng);
            let on = [1, v, u, f.mul(&u, &v)];
            let l2 = ring.linear_power(&on, 2).unwrap();
            assert!(ring.diff_action(&q, &l2).unwrap().is_zero(&f));
            let off = [1, v, u, f.add(&f.mul(&u, &v), &1)];
            let l2 = ring.linear_power(&off, 2).unwrap();
            assert!(!ring.diff_action(&q, &l2).unwrap().is_zero(&f));
        }
    }

    #[test]
    fn partials_of_quadric() {
        let ring = r4();
        let q = quadric(&ring);
        assert_eq!(ring.partials_at_point(&q, &[1, 0, 0, 0], 1).unwrap(), vec![0]);
        assert_eq!(ring.partials_at_point(&q, &[1, 1, 1, 1], 1).unwrap(), vec![0]);
        // gradient (x4, -x3, -x2, x1) at (1,0,0,0)
        let grad = ring.partials_at_point(&q, &[1, 0, 0, 0], 2).unwrap();
        assert_eq!(grad, vec![0, 0, 0, 1]);
        assert_eq!(grad.iter().filter(|x| **x != 0).count(), 1);
        assert_eq!(ring.partials_at_point(&q, &[1, 0, 0, 0], 3).unwrap().len(), binom(5, 3));
    }

    #[test]
    fn bigraded_partials_count() {
        let bi = PolyRing::new(PrimeField::default(), GradingSpec::P1XP1);
        for m in 1..5 {
            assert_eq!(bi.vanishing_operators(m).unwrap().len(), m * (m + 1) / 2);
        }
        // x0 y1 - x1 y0 at ([1:2],[1:2]): value 0, d/dx1 -> -y0 = -1, d/dy1 -> x0 = 1
        let f = bi.from_int_terms(Degree::Bi(1, 1), &[([1, 0, 0, 1], 1), ([0, 1, 1, 0], -1)]).unwrap();
        let fld = bi.field().clone();
        let vals = bi.partials_at_point(&f, &[1, 2, 1, 2], 2).unwrap();
        assert_eq!(vals, vec![0, fld.from_i64(-1), 1]);
    }

    #[test]
    fn rational_and_prime_agree_on_integer_data() {
        let rq = PolyRing::new(RationalField, GradingSpec::P3);
        let rp = r4();
        let a = rq.linear_power(&[1, 2, 3, 4].map(|x| RationalField.from_i64(x)), 3).unwrap();
        let b = rp.linear_power(&[1, 2, 3, 4], 3).unwrap();
        let a_ints: Vec<u32> = a.coeffs.iter().map(|c| rp.field().from_i64(c.to_integer().try_into().unwrap())).collect();
        assert_eq!(a_ints, b.coeffs);
    }

    fn random_form(ring: &PolyRing<PrimeField>, deg: usize, seed: u64) -> PolyVector<PrimeField> {
        let mut rng = RandomSeed(seed).stream("form", deg as u64);
        let n = ring.dim(Degree::Total(deg));
        let coeffs = (0..n).map(|_| ring.field().random_nonzero(&mut rng)).collect();
        PolyVector { grading: ring.grading(), degree: Degree::Total(deg), coeffs }
    }

    proptest! {
        #[test]
        fn linear_power_equals_iterated_product(
            alpha in proptest::array::uniform4(0u32..1000), d in 1usize..6
        ) {
            prop_assume!(alpha.iter().any(|&a| a != 0));
            let ring = r4();
            let l = ring.linear_form(&alpha).unwrap();
            prop_assert_eq!(ring.linear_power(&alpha, d).unwrap(), ring.pow(&l, d).unwrap());
        }

        #[test]
        fn differential_operators_compose(seed in 0u64..500) {
            let ring = r4();
            let f = random_form(&ring, 3, seed);
            let g = random_form(&ring, 1, seed + 1);
            let h = random_form(&ring, 1, seed + 2);
            let gh = ring.mul(&g, &h).unwrap();
            let lhs = ring.diff_action(&f, &gh).unwrap();
            let rhs = ring.diff_action(&ring.diff_action(&f, &g).unwrap(), &h).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
