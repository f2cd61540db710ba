//! Graded pieces of ideals: powers of linear forms dual to grid points,
//! fat points in P^3, P^2 and P^1 x P^1, perp ideals of forms, and powers of
//! plane complete intersections. Quotients by these ideals, their Hilbert
//! functions, socles and multiplication maps.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::GridConfig;
use crate::linalg::{rank, DenseMatrix, SubspaceBasis};
use crate::poly::{binom, Degree, GradingSpec, PolyRing, PolyVector};

/// A homogeneous ideal in a standard graded ring, given degree by degree.
pub trait GradedIdeal<F: Field>: Sync {
    fn ring(&self) -> &PolyRing<F>;

    fn piece(&self, t: usize) -> Result<SubspaceBasis<F>>;

    fn piece_dim(&self, t: usize) -> Result<usize> {
        Ok(self.piece(t)?.dim())
    }
}

/// Rows `m * g` for every generator `g` of degree at most `t` and every
/// monomial `m` of the complementary degree.
pub fn multiples_matrix<F: Field>(ring: &PolyRing<F>, gens: &[PolyVector<F>], t: Degree) -> Result<DenseMatrix<F>> {
    let field = ring.field();
    let target = ring.basis(t)?;
    let mut out = DenseMatrix::zeros(field, 0, target.len());
    for g in gens {
        let Some(rest) = t.checked_sub(g.degree) else { continue };
        let terms = ring.terms(g)?;
        for m in ring.basis(rest)?.monomials() {
            let mut row = vec![field.zero(); target.len()];
            for (mg, c) in &terms {
                row[target.index_of(&m.mul(mg)).expect("product lies in the target piece")] = c.clone();
            }
            out.push_row(&row);
        }
    }
    Ok(out)
}

/// The ideal generated by the `d`-th powers of the linear forms dual to the
/// points of a grid.
#[derive(Debug, Clone)]
pub struct PowersIdealSpec<F: Field> {
    grid: GridConfig<F>,
    d: usize,
    ring: PolyRing<F>,
    generators: Vec<PolyVector<F>>,
}

impl<F: Field> PowersIdealSpec<F> {
    pub fn new(grid: GridConfig<F>, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDegree("the power d must be at least 1".into()));
        }
        let ring = PolyRing::new(grid.field().clone(), GradingSpec::P3);
        let generators = grid.points().iter().map(|p| ring.linear_power(p, d)).collect::<Result<_>>()?;
        Ok(PowersIdealSpec { grid, d, ring, generators })
    }

    pub fn grid(&self) -> &GridConfig<F> {
        &self.grid
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[PolyVector<F>] {
        &self.generators
    }

    /// The quotient vanishes by this degree: the ideal contains the `d`-th
    /// powers of four independent linear forms.
    pub fn degree_cap(&self) -> usize {
        4 * (self.d - 1) + 1
    }
}

impl<F: Field> GradedIdeal<F> for PowersIdealSpec<F> {
    fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    fn piece(&self, t: usize) -> Result<SubspaceBasis<F>> {
        powers_ideal_piece(self, t)
    }
}

pub fn powers_ideal_piece<F: Field>(spec: &PowersIdealSpec<F>, t: usize) -> Result<SubspaceBasis<F>> {
    let ring = &spec.ring;
    let deg = Degree::Total(t);
    if t < spec.d {
        return Ok(SubspaceBasis::zero(ring.field(), ring.grading(), deg));
    }
    let m = multiples_matrix(ring, &spec.generators, deg)?;
    SubspaceBasis::span(ring.field(), ring.grading(), deg, m)
}

/// Points with a common multiplicity. Points of P^1 x P^1 are given as
/// `(x0, x1, y0, y1)`.
#[derive(Debug, Clone)]
pub struct FatPointsSpec<F: Field> {
    grading: GradingSpec,
    points: Vec<Vec<F::Elem>>,
    m: usize,
}

impl<F: Field> FatPointsSpec<F> {
    pub fn new(ring: &PolyRing<F>, points: Vec<Vec<F::Elem>>, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("multiplicity must be at least 1".into()));
        }
        let field = ring.field();
        let n = ring.nvars();
        let same = |p: &[F::Elem], q: &[F::Elem]| match ring.grading() {
            GradingSpec::Total { .. } => crate::geometry::projectively_equal(field, p, q),
            GradingSpec::Bigraded => {
                crate::geometry::projectively_equal(field, &p[..2], &q[..2])
                    && crate::geometry::projectively_equal(field, &p[2..], &q[2..])
            }
        };
        for (k, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(Error::InvalidArgument(format!("point with {} coordinates in {n} variables", p.len())));
            }
            if points[..k].iter().any(|q| same(p, q)) {
                return Err(Error::InvalidArgument(format!("point {} is repeated", k + 1)));
            }
        }
        Ok(FatPointsSpec { grading: ring.grading(), points, m })
    }

    /// The grid points of P^3 with multiplicity `m`.
    pub fn grid(grid: &GridConfig<F>, m: usize) -> Result<Self> {
        let ring = PolyRing::new(grid.field().clone(), GradingSpec::P3);
        Self::new(&ring, grid.points().into_iter().map(|p| p.to_vec()).collect(), m)
    }

    /// The grid as points of P^1 x P^1 with multiplicity `m`.
    pub fn bigraded_grid(grid: &GridConfig<F>, m: usize) -> Result<Self> {
        let ring = PolyRing::new(grid.field().clone(), GradingSpec::P1XP1);
        Self::new(&ring, grid.bigraded_points().into_iter().map(|p| p.to_vec()).collect(), m)
    }

    pub fn points(&self) -> &[Vec<F::Elem>] {
        &self.points
    }

    pub fn multiplicity(&self) -> usize {
        self.m
    }

    pub fn grading(&self) -> GradingSpec {
        self.grading
    }
}

/// Forms of degree `deg` vanishing to order at least `m` at every point,
/// as the kernel of the matrix of partial derivatives evaluated at the
/// points.
pub fn fat_points_piece<F: Field>(ring: &PolyRing<F>, spec: &FatPointsSpec<F>, deg: Degree) -> Result<SubspaceBasis<F>> {
    if ring.grading() != spec.grading {
        return Err(Error::GradingMismatch(format!("{:?} points in a {:?} ring", spec.grading, ring.grading())));
    }
    let ops = match deg {
        // order exactly min(m-1, t): for t < m - 1 this forces the form to vanish
        Degree::Total(t) => ring.vanishing_operators((spec.m - 1).min(t) + 1)?,
        Degree::Bi(..) => ring.vanishing_operators(spec.m)?,
    };
    let cols = ring.dim(deg);
    let mut conditions = DenseMatrix::zeros(ring.field(), 0, cols);
    for p in &spec.points {
        for op in &ops {
            conditions.push_row(&ring.partial_functional(deg, p, op)?);
        }
    }
    SubspaceBasis::kernel(ring.field(), ring.grading(), deg, &conditions)
}

pub fn bigraded_fat_points_piece<F: Field>(
    ring: &PolyRing<F>,
    spec: &FatPointsSpec<F>,
    u: usize,
    v: usize,
) -> Result<SubspaceBasis<F>> {
    fat_points_piece(ring, spec, Degree::Bi(u, v))
}

/// A set of fat points seen as a graded ideal in its (totally graded) ring.
#[derive(Debug, Clone)]
pub struct FatPointsIdeal<F: Field> {
    ring: PolyRing<F>,
    spec: FatPointsSpec<F>,
}

impl<F: Field> FatPointsIdeal<F> {
    pub fn new(ring: PolyRing<F>, spec: FatPointsSpec<F>) -> Result<Self> {
        if !matches!(ring.grading(), GradingSpec::Total { .. }) || ring.grading() != spec.grading {
            return Err(Error::GradingMismatch("fat points ideal needs a totally graded ring".into()));
        }
        Ok(FatPointsIdeal { ring, spec })
    }
}

impl<F: Field> GradedIdeal<F> for FatPointsIdeal<F> {
    fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    fn piece(&self, t: usize) -> Result<SubspaceBasis<F>> {
        fat_points_piece(&self.ring, &self.spec, Degree::Total(t))
    }
}

/// `F^perp`: operators `G` with `G` applied to `F` equal to zero.
#[derive(Debug, Clone)]
pub struct PerpIdeal<F: Field> {
    ring: PolyRing<F>,
    form: PolyVector<F>,
    deg: usize,
}

impl<F: Field> PerpIdeal<F> {
    pub fn new(ring: PolyRing<F>, form: PolyVector<F>) -> Result<Self> {
        let deg = form.total_degree()?;
        if form.is_zero(ring.field()) {
            return Err(Error::ZeroForm);
        }
        Ok(PerpIdeal { ring, form, deg })
    }

    pub fn form_degree(&self) -> usize {
        self.deg
    }

    /// The contraction map `R_s -> R_{deg F - s}`, `G -> G(F)`; one column per
    /// monomial of degree `s`.
    pub fn contraction_matrix(&self, s: usize) -> Result<DenseMatrix<F>> {
        let ring = &self.ring;
        let field = ring.field();
        let source = ring.basis(Degree::Total(s))?;
        let rows = ring.dim(Degree::Total(self.deg - s));
        let mut m = DenseMatrix::zeros(field, rows, source.len());
        for (c, mon) in source.monomials().iter().enumerate() {
            let op = ring.from_terms(Degree::Total(s), &[(*mon, field.one())])?;
            let image = ring.diff_action(&self.form, &op)?;
            for (r, x) in image.coeffs.into_iter().enumerate() {
                m.set(r, c, x);
            }
        }
        Ok(m)
    }
}

impl<F: Field> GradedIdeal<F> for PerpIdeal<F> {
    fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    fn piece(&self, s: usize) -> Result<SubspaceBasis<F>> {
        perp_piece(self, s)
    }
}

pub fn perp_piece<F: Field>(ideal: &PerpIdeal<F>, s: usize) -> Result<SubspaceBasis<F>> {
    let ring = &ideal.ring;
    let deg = Degree::Total(s);
    if s > ideal.deg {
        return Ok(SubspaceBasis::full(ring.field(), ring.grading(), deg));
    }
    SubspaceBasis::kernel(ring.field(), ring.grading(), deg, &ideal.contraction_matrix(s)?)
}

/// `(f, g)^m` in three variables for a regular sequence `f, g`.
#[derive(Debug, Clone)]
pub struct CiPowerIdeal<F: Field> {
    ring: PolyRing<F>,
    generators: Vec<PolyVector<F>>,
}

impl<F: Field> CiPowerIdeal<F> {
    pub fn new(ring: PolyRing<F>, f: &PolyVector<F>, g: &PolyVector<F>, m: usize) -> Result<Self> {
        if ring.grading() != GradingSpec::P2 {
            return Err(Error::GradingMismatch("complete intersections live in three variables".into()));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        let a = f.total_degree()?;
        let b = g.total_degree()?;
        if a == 0 || b == 0 {
            return Err(Error::DegenerateCi("generators must have positive degree".into()));
        }
        let pair = [f.clone(), g.clone()];
        for t in 0..=a + b {
            let deg = Degree::Total(t);
            let dim = rank(ring.field(), &multiples_matrix(&ring, &pair, deg)?) as i64;
            let (t, a, b) = (t as i64, a as i64, b as i64);
            let expected = dim_s(t - a) + dim_s(t - b) - dim_s(t - a - b);
            if dim != expected {
                return Err(Error::DegenerateCi(format!(
                    "dim[(f,g)]_{t} = {dim}, a regular sequence of degrees {a},{b} gives {expected}"
                )));
            }
        }
        let generators = (0..=m)
            .map(|i| ring.mul(&ring.pow(f, m - i)?, &ring.pow(g, i)?))
            .collect::<Result<_>>()?;
        Ok(CiPowerIdeal { ring, generators })
    }
}

impl<F: Field> GradedIdeal<F> for CiPowerIdeal<F> {
    fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    fn piece(&self, t: usize) -> Result<SubspaceBasis<F>> {
        let deg = Degree::Total(t);
        SubspaceBasis::span(self.ring.field(), self.ring.grading(), deg, multiples_matrix(&self.ring, &self.generators, deg)?)
    }

    fn piece_dim(&self, t: usize) -> Result<usize> {
        Ok(rank(self.ring.field(), &multiples_matrix(&self.ring, &self.generators, Degree::Total(t))?))
    }
}

pub fn ci_power_piece<F: Field>(
    ring: &PolyRing<F>,
    f: &PolyVector<F>,
    g: &PolyVector<F>,
    m: usize,
    t: usize,
) -> Result<SubspaceBasis<F>> {
    CiPowerIdeal::new(ring.clone(), f, g, m)?.piece(t)
}

/// `dim k[x,y,z]_e`, zero for negative `e`.
pub fn dim_s(e: i64) -> i64 {
    if e < 0 {
        0
    } else {
        binom(e as usize + 2, 2) as i64
    }
}

/// `dim k[x,y,z,w]_e`, zero for negative `e`.
pub fn dim_r(e: i64) -> i64 {
    if e < 0 {
        0
    } else {
        binom(e as usize + 3, 3) as i64
    }
}

/// `dim [(f,g)^m]_t` for a regular sequence of degrees `a, b` in three
/// variables, read off the resolution
/// `0 -> F (x) Sym^{m-1} G -> Sym^m G -> (f,g)^m -> 0`.
pub fn ci_power_dim_formula(a: i64, b: i64, m: i64, t: i64) -> i64 {
    let gens: i64 = (0..=m).map(|i| dim_s(t - a * (m - i) - b * i)).sum();
    let syz: i64 = (0..m).map(|i| dim_s(t - (a + b) - a * (m - 1 - i) - b * i)).sum();
    gens - syz
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HilbertKind {
    Quotient,
    Ideal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub t: usize,
    pub dim: usize,
    pub delta: i64,
}

/// Dimensions of the graded pieces in degrees `0..=top`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub kind: HilbertKind,
    pub dims: Vec<usize>,
}

impl HilbertTable {
    pub fn new(kind: HilbertKind, dims: Vec<usize>) -> Self {
        HilbertTable { kind, dims }
    }

    pub fn get(&self, t: usize) -> Option<usize> {
        self.dims.get(t).copied()
    }

    pub fn delta(&self, t: usize) -> Option<i64> {
        let now = self.get(t)? as i64;
        let before = if t == 0 { 0 } else { self.get(t - 1)? as i64 };
        Some(now - before)
    }

    pub fn rows(&self) -> Vec<HilbertRow> {
        (0..self.dims.len())
            .map(|t| HilbertRow { t, dim: self.dims[t], delta: self.delta(t).expect("in range") })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,dim,delta\n");
        for r in self.rows() {
            s.push_str(&format!("{},{},{}\n", r.t, r.dim, r.delta));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "kind": self.kind, "rows": self.rows() })
    }
}

/// The pieces of a quotient `R/I` from degree 0 up to the last computed
/// degree. When `complete` is set the quotient is zero beyond that degree.
#[derive(Debug, Clone)]
pub struct GradedQuotient<F: Field> {
    ring: PolyRing<F>,
    pieces: Vec<SubspaceBasis<F>>,
    free: Vec<Vec<usize>>,
    complete: bool,
}

impl<F: Field> GradedQuotient<F> {
    /// Computes pieces until the quotient vanishes or `cap` is reached.
    pub fn compute<I: GradedIdeal<F> + ?Sized>(ideal: &I, cap: usize) -> Result<Self> {
        Self::compute_range(ideal, cap, true)
    }

    /// Computes exactly the pieces in degrees `0..=top`, stopping early only
    /// if the quotient vanishes.
    pub fn up_to<I: GradedIdeal<F> + ?Sized>(ideal: &I, top: usize) -> Result<Self> {
        Self::compute_range(ideal, top, true)
    }

    fn compute_range<I: GradedIdeal<F> + ?Sized>(ideal: &I, top: usize, stop_at_zero: bool) -> Result<Self> {
        let batch = rayon::current_num_threads().max(1);
        let mut pieces: Vec<SubspaceBasis<F>> = Vec::new();
        let mut complete = false;
        let mut t = 0;
        while t <= top && !complete {
            let hi = (t + batch - 1).min(top);
            let mut got = (t..=hi).into_par_iter().map(|s| ideal.piece(s)).collect::<Result<Vec<_>>>()?;
            for p in got.drain(..) {
                let vanished = p.codim() == 0;
                pieces.push(p);
                if vanished && stop_at_zero {
                    complete = true;
                    break;
                }
            }
            t = hi + 1;
        }
        let free = pieces.iter().map(|p| p.free_columns()).collect();
        Ok(GradedQuotient { ring: ideal.ring().clone(), pieces, free, complete })
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn top(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    fn known(&self, t: usize) -> Result<()> {
        if t < self.pieces.len() || self.complete {
            Ok(())
        } else {
            Err(Error::InvalidDegree(format!("degree {t} beyond the computed range 0..={}", self.top())))
        }
    }

    pub fn ideal_piece(&self, t: usize) -> Option<&SubspaceBasis<F>> {
        self.pieces.get(t)
    }

    pub fn dim(&self, t: usize) -> Result<usize> {
        self.known(t)?;
        Ok(self.pieces.get(t).map_or(0, |p| p.codim()))
    }

    pub fn ideal_dim(&self, t: usize) -> Result<usize> {
        self.known(t)?;
        Ok(self.pieces.get(t).map_or(self.ring.dim(Degree::Total(t)), |p| p.dim()))
    }

    pub fn hilbert_table(&self, kind: HilbertKind) -> HilbertTable {
        let dims = self
            .pieces
            .iter()
            .map(|p| match kind {
                HilbertKind::Quotient => p.codim(),
                HilbertKind::Ideal => p.dim(),
            })
            .collect();
        HilbertTable::new(kind, dims)
    }

    /// Image of `form * x^e` in `A_t`, written over the standard monomials of
    /// `A_t`.
    fn reduced_product(&self, form_terms: &[(crate::poly::Monomial, F::Elem)], mon: &crate::poly::Monomial, t: usize) -> Result<Vec<F::Elem>> {
        let field = self.ring.field();
        let basis = self.ring.basis(Degree::Total(t))?;
        let mut v = vec![field.zero(); basis.len()];
        for (mf, c) in form_terms {
            let k = basis.index_of(&mf.mul(mon)).expect("product lies in the target piece");
            v[k] = field.add(&v[k], c);
        }
        self.pieces[t].reduce(field, &mut v);
        Ok(self.free[t].iter().map(|&c| v[c].clone()).collect())
    }

    /// Matrix of multiplication by a form of degree `k`, `A_{t-k} -> A_t`, with
    /// one row per standard monomial of the source.
    pub fn mult_matrix(&self, form: &PolyVector<F>, t: usize) -> Result<DenseMatrix<F>> {
        let field = self.ring.field();
        let k = form.total_degree()?;
        self.known(t)?;
        let dim_to = self.dim(t)?;
        if t < k || dim_to == 0 {
            let dim_from = if t < k { 0 } else { self.dim(t - k)? };
            return Ok(DenseMatrix::zeros(field, dim_from, dim_to));
        }
        let s = t - k;
        let source = self.ring.basis(Degree::Total(s))?;
        let terms = self.ring.terms(form)?;
        let rows = self.free[s]
            .iter()
            .map(|&c| self.reduced_product(&terms, &source.get(c), t))
            .collect::<Result<Vec<_>>>()?;
        DenseMatrix::from_rows(dim_to, rows)
    }

    pub fn mult_rank(&self, form: &PolyVector<F>, t: usize) -> Result<usize> {
        Ok(rank(self.ring.field(), &self.mult_matrix(form, t)?))
    }

    /// `dim` of the socle in degree `t`: elements of `A_t` killed by every
    /// variable.
    pub fn socle_dim(&self, t: usize) -> Result<usize> {
        self.known(t + 1)?;
        let dim_t = self.dim(t)?;
        let dim_next = self.dim(t + 1)?;
        if dim_t == 0 || dim_next == 0 {
            return Ok(dim_t);
        }
        let field = self.ring.field();
        let n = self.ring.nvars();
        let source = self.ring.basis(Degree::Total(t))?;
        let mut rows = Vec::with_capacity(dim_t);
        for &c in &self.free[t] {
            let mon = source.get(c);
            let mut row = Vec::with_capacity(n * dim_next);
            for var in 0..n {
                let mut e = [0u16; crate::poly::MAX_VARS];
                e[var] = 1;
                row.extend(self.reduced_product(&[(crate::poly::Monomial(e), field.one())], &mon, t + 1)?);
            }
            rows.push(row);
        }
        let m = DenseMatrix::from_rows(n * dim_next, rows)?;
        Ok(dim_t - rank(field, &m))
    }
}

/// Hilbert function of `R/I` or of `I` in degrees `0..=top`.
pub fn hilbert_table<F: Field, I: GradedIdeal<F> + ?Sized>(ideal: &I, top: usize, kind: HilbertKind) -> Result<HilbertTable> {
    let q = GradedQuotient::compute_range(ideal, top, false)?;
    Ok(q.hilbert_table(kind))
}

/// Socle dimensions of `R/I` in degrees `0..=top`.
pub fn socle_dims<F: Field, I: GradedIdeal<F> + ?Sized>(ideal: &I, top: usize) -> Result<Vec<usize>> {
    let q = GradedQuotient::compute_range(ideal, top + 1, true)?;
    (0..=top).map(|t| q.socle_dim(t)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MacaulayCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
}

/// Compares `dim [R/Lambda_{X,d}]_t` with `dim [I_X^{(t-d+1)}]_t`.
pub fn macaulay_dual_check<F: Field>(grid: &GridConfig<F>, d: usize, t: usize) -> Result<MacaulayCheck> {
    if t < d {
        return Err(Error::InvalidDegree(format!("t = {t} is below d = {d}")));
    }
    let spec = PowersIdealSpec::new(grid.clone(), d)?;
    let lhs = powers_ideal_piece(&spec, t)?.codim();
    let fat = FatPointsSpec::grid(grid, t - d + 1)?;
    let rhs = fat_points_piece(spec.ring(), &fat, Degree::Total(t))?.dim();
    Ok(MacaulayCheck { lhs, rhs, equal: lhs == rhs })
}
