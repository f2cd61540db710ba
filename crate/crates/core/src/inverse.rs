//! Inverse systems of ideals generated in a single degree `d`: the pieces
//! `K_t = I_t^perp` of the divided power module under contraction, where
//! `x^a o X^b = X^(b-a)`. `K_t` is dual to `(R/I)_t`, and multiplication by
//! a form on `R/I` is dual to contraction by it on `K`.
//!
//! For `t > d` the ideal satisfies `I_t = R_1 I_{t-1}`, so `F` lies in `K_t`
//! exactly when every `x_i o F` lies in `K_{t-1}`. Each piece is computed
//! either as the null space of the multiples of the generators or from the
//! previous piece through that condition, whichever matrix is cheaper. Both
//! routes end in the reduced row echelon form, so the result does not depend
//! on the choice.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideals::{multiples_matrix, HilbertKind, HilbertTable, PowersIdealSpec};
use crate::linalg::{null_space, rank, DenseMatrix};
use crate::poly::{Degree, Monomial, PolyRing, PolyVector, MAX_VARS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Generators,
    Lift,
}

#[derive(Debug, Clone)]
pub struct InverseSystem<F: Field> {
    ring: PolyRing<F>,
    d: usize,
    pieces: Vec<DenseMatrix<F>>,
    routes: Vec<Option<Route>>,
    complete: bool,
}

impl<F: Field> InverseSystem<F> {
    /// Pieces in degrees `0..=cap`, stopping once a piece vanishes.
    pub fn compute(ring: &PolyRing<F>, gens: &[PolyVector<F>], cap: usize) -> Result<Self> {
        Self::compute_with(ring, gens, cap, None)
    }

    /// As [`InverseSystem::compute`] with every degree above `d` forced
    /// through one route.
    pub fn compute_with(ring: &PolyRing<F>, gens: &[PolyVector<F>], cap: usize, force: Option<Route>) -> Result<Self> {
        let d = single_degree(gens)?;
        let field = ring.field();
        let mut sys = InverseSystem { ring: ring.clone(), d, pieces: Vec::new(), routes: Vec::new(), complete: false };
        for t in 0..=cap {
            let deg = Degree::Total(t);
            let (piece, route) = if t < d {
                (DenseMatrix::identity(field, ring.dim(deg)), None)
            } else if t == d {
                (sys.from_generators(gens, t)?, Some(Route::Generators))
            } else {
                let prev = &sys.pieces[t - 1];
                let route = force.unwrap_or_else(|| sys.cheaper_route(gens.len(), prev.rows(), t));
                match route {
                    Route::Generators => (sys.from_generators(gens, t)?, Some(route)),
                    Route::Lift => (sys.lift(prev, t)?, Some(route)),
                }
            };
            let vanished = piece.rows() == 0;
            sys.pieces.push(piece);
            sys.routes.push(route);
            if vanished {
                sys.complete = true;
                break;
            }
        }
        Ok(sys)
    }

    pub fn of_powers(spec: &PowersIdealSpec<F>) -> Result<Self> {
        Self::compute(crate::ideals::GradedIdeal::ring(spec), spec.generators(), spec.degree_cap())
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn generator_degree(&self) -> usize {
        self.d
    }

    pub fn top(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Reduced basis of `K_t`, one row per element, over the monomials of
    /// degree `t`.
    pub fn piece(&self, t: usize) -> Option<&DenseMatrix<F>> {
        self.pieces.get(t)
    }

    pub fn route(&self, t: usize) -> Option<Route> {
        self.routes.get(t).copied().flatten()
    }

    /// `dim K_t = dim (R/I)_t`.
    pub fn dim(&self, t: usize) -> Result<usize> {
        match self.pieces.get(t) {
            Some(p) => Ok(p.rows()),
            None if self.complete => Ok(0),
            None => Err(Error::InvalidDegree(format!("degree {t} beyond the computed range 0..={}", self.top()))),
        }
    }

    /// Hilbert function of the quotient `R/I`.
    pub fn hilbert_table(&self) -> HilbertTable {
        HilbertTable::new(HilbertKind::Quotient, self.pieces.iter().map(DenseMatrix::rows).collect())
    }

    /// Rank of multiplication by `form` from `(R/I)_{t-k}` to `(R/I)_t`.
    pub fn mult_rank(&self, form: &PolyVector<F>, t: usize) -> Result<usize> {
        let k = form.total_degree()?;
        if t < k || self.dim(t)? == 0 {
            return Ok(0);
        }
        let images = contract(&self.ring, form, &self.pieces[t], t)?;
        Ok(rank(self.ring.field(), &images))
    }

    fn from_generators(&self, gens: &[PolyVector<F>], t: usize) -> Result<DenseMatrix<F>> {
        let field = self.ring.field();
        let m = multiples_matrix(&self.ring, gens, Degree::Total(t))?;
        let mut k = null_space(field, &m);
        k.rref_in_place(field);
        Ok(k)
    }

    /// Operation counts of the two eliminations, rows times columns times
    /// the smaller side.
    fn cheaper_route(&self, ngens: usize, prev_dim: usize, t: usize) -> Route {
        let n = self.ring.nvars();
        let cost = |r: usize, c: usize| (r as f64) * (c as f64) * (r.min(c) as f64);
        let gen_rows = ngens * self.ring.dim_total(t as i64 - self.d as i64);
        let by_gens = cost(gen_rows, self.ring.dim(Degree::Total(t)));
        let lift_rows = n * (n - 1) / 2 * self.ring.dim_total(t as i64 - 2);
        let by_lift = cost(lift_rows, n * prev_dim);
        if by_lift < by_gens {
            Route::Lift
        } else {
            Route::Generators
        }
    }

    /// `K_t` from `K_{t-1}`: tuples `(G_i)` in `K_{t-1}` with
    /// `x_j o G_i = x_i o G_j` are exactly the contractions `G_i = x_i o F`.
    fn lift(&self, prev: &DenseMatrix<F>, t: usize) -> Result<DenseMatrix<F>> {
        let field = self.ring.field();
        let n = self.ring.nvars();
        let target = self.ring.basis(Degree::Total(t))?;
        let k = prev.rows();
        if k == 0 {
            return Ok(DenseMatrix::zeros(field, 0, target.len()));
        }
        let below = self.ring.dim(Degree::Total(t - 2));
        let partials: Vec<DenseMatrix<F>> =
            (0..n).map(|j| contract(&self.ring, &self.variable(j), prev, t - 1)).collect::<Result<_>>()?;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        // columns are the unknowns c_{i,r} with G_i = sum_r c_{i,r} B_r
        let mut m = DenseMatrix::zeros(field, pairs.len() * below, n * k);
        for (p, &(i, j)) in pairs.iter().enumerate() {
            for r in 0..k {
                let (xj_bi, xi_bj) = (partials[j].row(r), partials[i].row(r));
                for s in 0..below {
                    m.set(p * below + s, i * k + r, xj_bi[s].clone());
                    m.set(p * below + s, j * k + r, field.neg(&xi_bj[s]));
                }
            }
        }
        let solutions = null_space(field, &m);
        // F at X^b is G_i at X^(b - e_i) for the first variable dividing X^b
        let source = self.ring.basis(Degree::Total(t - 1))?;
        let choice: Vec<(usize, usize)> = target
            .monomials()
            .iter()
            .map(|b| {
                let i = (0..n).find(|&i| b.0[i] > 0).expect("positive degree");
                let mut e = b.0;
                e[i] -= 1;
                (i, source.index_of(&Monomial(e)).expect("lower degree monomial"))
            })
            .collect();
        let mut out = DenseMatrix::zeros(field, 0, target.len());
        for c in 0..solutions.rows() {
            let coeffs = solutions.row(c);
            let mut g = vec![vec![field.zero(); source.len()]; n];
            for (i, gi) in g.iter_mut().enumerate() {
                for r in 0..k {
                    field.axpy(gi, &coeffs[i * k + r], prev.row(r));
                }
            }
            let f: Vec<F::Elem> = choice.iter().map(|&(i, s)| g[i][s].clone()).collect();
            out.push_row(&f);
        }
        out.rref_in_place(field);
        Ok(out)
    }

    fn variable(&self, j: usize) -> PolyVector<F> {
        let mut e = [0u16; MAX_VARS];
        e[j] = 1;
        let field = self.ring.field();
        self.ring
            .from_terms(Degree::Total(1), &[(Monomial(e), field.one())])
            .expect("a variable is a linear form")
    }
}

fn single_degree<F: Field>(gens: &[PolyVector<F>]) -> Result<usize> {
    let first = gens.first().ok_or_else(|| Error::InvalidArgument("no generators".into()))?.total_degree()?;
    for g in gens {
        if g.total_degree()? != first {
            return Err(Error::DegreeMismatch("generators of different degrees".into()));
        }
    }
    if first == 0 {
        return Err(Error::InvalidDegree("generators of degree 0 give the unit ideal".into()));
    }
    Ok(first)
}

/// Contraction by `form` of each row of `rows`, elements of degree `t`.
pub fn contract<F: Field>(ring: &PolyRing<F>, form: &PolyVector<F>, rows: &DenseMatrix<F>, t: usize) -> Result<DenseMatrix<F>> {
    let field = ring.field();
    let k = form.total_degree()?;
    let source = ring.basis(Degree::Total(t))?;
    if rows.cols() != source.len() {
        return Err(Error::DegreeMismatch(format!("{} columns for degree {t}", rows.cols())));
    }
    let Some(low) = t.checked_sub(k) else {
        return Ok(DenseMatrix::zeros(field, rows.rows(), 0));
    };
    let target = ring.basis(Degree::Total(low))?;
    let mut moves: Vec<(usize, usize, F::Elem)> = Vec::new();
    for (a, c) in ring.terms(form)? {
        for (s, b) in source.monomials().iter().enumerate() {
            if let Some(q) = b.div(&a) {
                moves.push((s, target.index_of(&q).expect("quotient lies in the target piece"), c.clone()));
            }
        }
    }
    let mut out = DenseMatrix::zeros(field, rows.rows(), target.len());
    for r in 0..rows.rows() {
        let src = rows.row(r);
        let dst = out.row_mut(r);
        for (s, q, c) in &moves {
            if !field.is_zero(&src[*s]) {
                dst[*q] = field.add(&dst[*q], &field.mul(c, &src[*s]));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RandomSeed, RationalField};
    use crate::geometry::{GridConfig, GridParams, Locus};
    use crate::ideals::GradedQuotient;
    use proptest::prelude::*;

    fn spec<F: Field>(field: F, a: usize, b: usize, d: usize, seed: u64) -> PowersIdealSpec<F> {
        let g = GridConfig::new(field, a, b, GridParams::Random(RandomSeed(seed))).unwrap();
        PowersIdealSpec::new(g, d).unwrap()
    }

    #[test]
    fn routes_agree() {
        let s = spec(PrimeField::default(), 3, 4, 3, 5);
        let ring = crate::ideals::GradedIdeal::ring(&s);
        let by_gens = InverseSystem::compute_with(ring, s.generators(), s.degree_cap(), Some(Route::Generators)).unwrap();
        let by_lift = InverseSystem::compute_with(ring, s.generators(), s.degree_cap(), Some(Route::Lift)).unwrap();
        assert_eq!(by_gens.top(), by_lift.top());
        for t in 0..=by_gens.top() {
            assert_eq!(by_gens.piece(t), by_lift.piece(t), "degree {t}");
        }
    }

    #[test]
    fn small_tables() {
        let s = spec(PrimeField::default(), 3, 3, 2, 1);
        assert_eq!(InverseSystem::of_powers(&s).unwrap().hilbert_table().dims, vec![1, 4, 1, 0]);
        let s = spec(PrimeField::default(), 3, 6, 5, 1);
        let h = InverseSystem::of_powers(&s).unwrap().hilbert_table();
        assert_eq!(h.delta(6), Some(-11));
    }

    #[test]
    fn contraction_by_a_variable() {
        let field = PrimeField::default();
        let ring = PolyRing::new(field, crate::poly::GradingSpec::P3);
        // x1 o X1^2 X2 = X1 X2
        let f = ring.from_int_terms(Degree::Total(3), &[([2, 1, 0, 0], 1)]).unwrap();
        let x1 = ring.from_int_terms(Degree::Total(1), &[([1, 0, 0, 0], 1)]).unwrap();
        let rows = DenseMatrix::from_rows(f.coeffs.len(), vec![f.coeffs.clone()]).unwrap();
        let out = contract(&ring, &x1, &rows, 3).unwrap();
        let expected = ring.from_int_terms(Degree::Total(2), &[([1, 1, 0, 0], 1)]).unwrap();
        assert_eq!(out.row(0), expected.coeffs.as_slice());
    }

    #[test]
    fn rational_matches_prime() {
        let p = InverseSystem::of_powers(&spec(PrimeField::default(), 3, 3, 3, 2)).unwrap();
        let q = InverseSystem::of_powers(&spec(RationalField, 3, 3, 3, 2)).unwrap();
        assert_eq!(p.hilbert_table(), q.hilbert_table());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn matches_the_quotient(a in 2usize..4, extra in 0usize..2, d in 1usize..5, seed in 0u64..1000) {
            let s = spec(PrimeField::default(), a, a + extra, d, seed);
            let sys = InverseSystem::of_powers(&s).unwrap();
            let quotient = GradedQuotient::compute(&s, s.degree_cap()).unwrap();
            prop_assert_eq!(sys.hilbert_table(), quotient.hilbert_table(HilbertKind::Quotient));
            let ring = crate::ideals::GradedIdeal::ring(&s);
            let l = s.grid().sample_form(Locus::Generic, &mut RandomSeed(seed).stream("l", 0)).unwrap();
            let form = ring.linear_form(&l).unwrap();
            let square = ring.linear_power(&l, 2).unwrap();
            for t in 1..=sys.top() {
                prop_assert_eq!(sys.mult_rank(&form, t).unwrap(), quotient.mult_rank(&form, t).unwrap());
                prop_assert_eq!(sys.mult_rank(&square, t).unwrap(), quotient.mult_rank(&square, t).unwrap());
            }
        }
    }
}
