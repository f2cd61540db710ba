//! Ranks of multiplication maps on `A = R/Lambda_{X,d}`: weak Lefschetz
//! verdicts, probes of special linear forms, powers of forms, and the 0/1
//! sequence of verdicts as `d` varies.
//!
//! Genericity protocol: a degree has maximal rank as soon as one random form
//! achieves it; it fails only if all `trials` forms fall short.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, RandomSeed};
use crate::geometry::{GridConfig, Locus, Point};
use crate::ideals::{GradedQuotient, PowersIdealSpec};
use crate::inverse::InverseSystem;
use crate::ideals::multiples_matrix;
use crate::linalg::{rank, union_dim, DenseMatrix, SubspaceBasis};
use crate::poly::{Degree, GradingSpec, PolyRing, PolyVector};

/// Rank data of a multiplication map `A_{t-k} -> A_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MultMapReport {
    pub t: usize,
    #[serde(rename = "dimFrom")]
    pub dim_from: usize,
    #[serde(rename = "dimTo")]
    pub dim_to: usize,
    pub rank: usize,
    #[serde(rename = "ker")]
    pub kernel_dim: usize,
    #[serde(rename = "coker")]
    pub coker_dim: usize,
    #[serde(rename = "maximal")]
    pub maximal_rank: bool,
    #[serde(skip)]
    pub expected_coker: usize,
    #[serde(skip)]
    pub expected_kernel: usize,
}

impl MultMapReport {
    pub fn new(t: usize, dim_from: usize, dim_to: usize, rank: usize) -> Self {
        assert!(rank <= dim_from.min(dim_to), "rank {rank} exceeds {dim_from} x {dim_to}");
        let report = MultMapReport {
            t,
            dim_from,
            dim_to,
            rank,
            kernel_dim: dim_from - rank,
            coker_dim: dim_to - rank,
            maximal_rank: rank == dim_from.min(dim_to),
            expected_coker: dim_to.saturating_sub(dim_from),
            expected_kernel: dim_from.saturating_sub(dim_to),
        };
        debug_assert!(report.identities_hold());
        report
    }

    pub fn identities_hold(&self) -> bool {
        self.rank + self.kernel_dim == self.dim_from
            && self.rank + self.coker_dim == self.dim_to
            && self.maximal_rank == (self.kernel_dim == self.expected_kernel)
            && self.maximal_rank == (self.coker_dim == self.expected_coker)
    }

    pub fn injective(&self) -> bool {
        self.kernel_dim == 0
    }

    pub fn surjective(&self) -> bool {
        self.coker_dim == 0
    }
}

fn nonzero_form<F: Field>(field: &F, l: &Point<F>) -> Result<()> {
    if l.iter().all(|c| field.is_zero(c)) {
        Err(Error::ZeroForm)
    } else {
        Ok(())
    }
}

/// `x l : A_{t-1} -> A_t`, with the cokernel computed as the codimension of
/// `[Lambda_{X,d}]_t + l R_{t-1}` in `R_t`.
pub fn mult_map_analysis<F: Field>(grid: &GridConfig<F>, d: usize, l: &Point<F>, t: usize) -> Result<MultMapReport> {
    let field = grid.field();
    nonzero_form(field, l)?;
    if t == 0 {
        return Err(Error::InvalidDegree("the map needs t >= 1".into()));
    }
    let spec = PowersIdealSpec::new(grid.clone(), d)?;
    let ring = crate::ideals::GradedIdeal::ring(&spec);
    let ideal_t = crate::ideals::powers_ideal_piece(&spec, t)?;
    let ideal_prev = crate::ideals::powers_ideal_piece(&spec, t - 1)?;
    let form = ring.linear_form(l)?;
    let deg = Degree::Total(t);
    let multiples = crate::ideals::multiples_matrix(ring, &[form], deg)?;
    let image = SubspaceBasis::span(field, ring.grading(), deg, multiples)?;
    let dim_r = ring.dim(deg);
    let coker = dim_r - union_dim(field, &ideal_t, &image)?;
    let dim_to = ideal_t.codim();
    let dim_from = ideal_prev.codim();
    Ok(MultMapReport::new(t, dim_from, dim_to, dim_to - coker))
}

/// Multiplication by `form` from `A_{t-k}` to `A_t` on a computed quotient.
pub fn mult_report<F: Field>(quotient: &GradedQuotient<F>, form: &PolyVector<F>, t: usize) -> Result<MultMapReport> {
    let k = form.total_degree()?;
    let dim_to = quotient.dim(t)?;
    let dim_from = if t < k { 0 } else { quotient.dim(t - k)? };
    let rank = quotient.mult_rank(form, t)?;
    Ok(MultMapReport::new(t, dim_from, dim_to, rank))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSummary {
    pub a: usize,
    pub b: usize,
    pub u: Vec<serde_json::Value>,
    pub v: Vec<serde_json::Value>,
}

impl GridSummary {
    pub fn of<F: Field>(grid: &GridConfig<F>) -> Self {
        let j = grid.to_json();
        GridSummary { a: j.a, b: j.b, u: j.u, v: j.v }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WlpReport {
    pub grid: GridSummary,
    pub d: usize,
    pub prime: Option<u64>,
    pub trials: usize,
    pub degrees: Vec<MultMapReport>,
    pub verdict: bool,
    pub failing: Vec<usize>,
}

impl WlpReport {
    pub fn degree(&self, t: usize) -> Option<&MultMapReport> {
        self.degrees.iter().find(|r| r.t == t)
    }

    /// Once the map is surjective in some degree above `d`, it stays
    /// surjective: the ideal has no generators past degree `d`.
    pub fn surjectivity_persists(&self) -> bool {
        let mut seen = false;
        for r in self.degrees.iter().filter(|r| r.t > self.d) {
            if seen && !r.surjective() {
                return false;
            }
            seen |= r.surjective();
        }
        true
    }

    /// Below the first degree without maximal rank, injective degrees form
    /// an initial segment.
    pub fn injectivity_is_initial(&self) -> bool {
        let stop = self.failing.first().copied().unwrap_or(usize::MAX);
        let mut lost = false;
        for r in self.degrees.iter().filter(|r| r.t < stop) {
            if lost && r.injective() {
                return false;
            }
            lost |= !r.injective();
        }
        true
    }
}

/// The quotient `R/Lambda_{X,d}`, computed until it vanishes.
pub fn artinian_quotient<F: Field>(grid: &GridConfig<F>, d: usize) -> Result<(PowersIdealSpec<F>, GradedQuotient<F>)> {
    let spec = PowersIdealSpec::new(grid.clone(), d)?;
    let quotient = GradedQuotient::compute(&spec, spec.degree_cap())?;
    Ok((spec, quotient))
}

fn generic_forms<F: Field>(grid: &GridConfig<F>, trials: usize, seed: RandomSeed) -> Result<Vec<Point<F>>> {
    (0..trials)
        .map(|i| grid.sample_form(Locus::Generic, &mut seed.stream("form", i as u64)))
        .collect()
}

/// Multiplication by `form` into degree `t`, read off the inverse system.
pub fn dual_mult_report<F: Field>(system: &InverseSystem<F>, form: &PolyVector<F>, t: usize) -> Result<MultMapReport> {
    let k = form.total_degree()?;
    let dim_to = system.dim(t)?;
    let dim_from = if t < k { 0 } else { system.dim(t - k)? };
    Ok(MultMapReport::new(t, dim_from, dim_to, system.mult_rank(form, t)?))
}

/// The inverse system of `Lambda_{X,d}`, computed until it vanishes.
pub fn artinian_dual<F: Field>(grid: &GridConfig<F>, d: usize) -> Result<(PowersIdealSpec<F>, InverseSystem<F>)> {
    let spec = PowersIdealSpec::new(grid.clone(), d)?;
    let system = InverseSystem::of_powers(&spec)?;
    Ok((spec, system))
}

/// Cokernels of `x l` on `A`, read off `A/lA`: on the hyperplane `l = 0`
/// each `l_P^d` restricts to the `d`-th power of a linear form in three
/// variables, so `A/lA` is a quotient of the plane ring.
#[derive(Debug, Clone)]
pub struct Restriction<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<PolyVector<F>>,
    d: usize,
    known: Vec<Option<usize>>,
}

impl<F: Field> Restriction<F> {
    pub fn new(grid: &GridConfig<F>, d: usize, l: &Point<F>) -> Result<Self> {
        let field = grid.field();
        nonzero_form(field, l)?;
        if d == 0 {
            return Err(Error::InvalidDegree("d must be at least 1".into()));
        }
        // solve l = 0 for the first variable with a nonzero coefficient
        let k = l.iter().position(|c| !field.is_zero(c)).expect("nonzero form");
        let ring = PolyRing::new(field.clone(), GradingSpec::P2);
        let mut gens = Vec::new();
        for p in grid.points() {
            let c: Vec<F::Elem> = (0..4)
                .filter(|&i| i != k)
                .map(|i| field.sub(&field.mul(&l[k], &p[i]), &field.mul(&p[k], &l[i])))
                .collect();
            // l_P vanishes on the hyperplane when P is the point dual to l
            if c.iter().any(|x| !field.is_zero(x)) {
                gens.push(ring.linear_power(&c, d)?);
            }
        }
        Ok(Restriction { ring, gens, d, known: Vec::new() })
    }

    /// `dim (A/lA)_t`, the cokernel of `x l : A_{t-1} -> A_t`.
    pub fn coker(&mut self, t: usize) -> Result<usize> {
        if self.known.len() <= t {
            self.known.resize(t + 1, None);
        }
        if let Some(c) = self.known[t] {
            return Ok(c);
        }
        let deg = Degree::Total(t);
        let c = if self.known[..t].contains(&Some(0)) {
            0
        } else if t < self.d {
            self.ring.dim(deg)
        } else {
            self.ring.dim(deg) - rank(self.ring.field(), &multiples_matrix(&self.ring, &self.gens, deg)?)
        };
        self.known[t] = Some(c);
        Ok(c)
    }

    /// `x l : A_{t-1} -> A_t` with the dimensions of `A` taken from `system`.
    pub fn report(&mut self, system: &InverseSystem<F>, t: usize) -> Result<MultMapReport> {
        if t == 0 {
            return Err(Error::InvalidDegree("the map needs t >= 1".into()));
        }
        let (dim_from, dim_to) = (system.dim(t - 1)?, system.dim(t)?);
        Ok(MultMapReport::new(t, dim_from, dim_to, dim_to - self.coker(t)?))
    }
}

/// Best rank over `n` forms, stopping at the first that reaches maximal
/// rank.
fn best_of(n: usize, mut report: impl FnMut(usize) -> Result<MultMapReport>) -> Result<MultMapReport> {
    let mut best: Option<MultMapReport> = None;
    for i in 0..n {
        let r = report(i)?;
        if best.is_none_or(|b| r.rank > b.rank) {
            best = Some(r);
        }
        if r.maximal_rank {
            break;
        }
    }
    best.ok_or_else(|| Error::InvalidArgument("at least one trial is required".into()))
}

fn wlp_report<F: Field>(grid: &GridConfig<F>, d: usize, trials: usize, degrees: Vec<MultMapReport>) -> WlpReport {
    let failing: Vec<usize> = degrees.iter().filter(|r| !r.maximal_rank).map(|r| r.t).collect();
    WlpReport {
        grid: GridSummary::of(grid),
        d,
        prime: grid.field().characteristic(),
        trials,
        verdict: failing.is_empty(),
        degrees,
        failing,
    }
}

fn restrictions<F: Field>(grid: &GridConfig<F>, d: usize, forms: &[Point<F>]) -> Result<Vec<Restriction<F>>> {
    forms.iter().map(|l| Restriction::new(grid, d, l)).collect()
}

/// Sweeps `x l` over every degree from 1 until `A` vanishes.
pub fn wlp_test<F: Field>(grid: &GridConfig<F>, d: usize, trials: usize, seed: RandomSeed) -> Result<WlpReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let (_, system) = artinian_dual(grid, d)?;
    let mut forms = restrictions(grid, d, &generic_forms(grid, trials, seed)?)?;
    let degrees = (1..=system.top())
        .map(|t| best_of(forms.len(), |i| forms[i].report(&system, t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(wlp_report(grid, d, trials, degrees))
}

/// Smallest cokernel of `x l : A_{t-1} -> A_t` over the generic trial forms,
/// for each `t` in `degrees`. Needs no dimensions of `A` itself.
pub fn generic_cokernels<F: Field>(
    grid: &GridConfig<F>,
    d: usize,
    degrees: &[usize],
    trials: usize,
    seed: RandomSeed,
) -> Result<Vec<usize>> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let mut forms = restrictions(grid, d, &generic_forms(grid, trials, seed)?)?;
    degrees
        .iter()
        .map(|&t| {
            let mut best = usize::MAX;
            for r in forms.iter_mut() {
                best = best.min(r.coker(t)?);
                if best == 0 {
                    break;
                }
            }
            Ok(best)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlpReport {
    pub k: usize,
    #[serde(flatten)]
    pub report: WlpReport,
}

/// As [`wlp_test`] with `x l^k : A_{t-k} -> A_t`.
pub fn slp_probe<F: Field>(grid: &GridConfig<F>, d: usize, k: usize, trials: usize, seed: RandomSeed) -> Result<SlpReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("the power k must be at least 1".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let (spec, system) = artinian_dual(grid, d)?;
    let ring = crate::ideals::GradedIdeal::ring(&spec);
    let forms = generic_forms(grid, trials, seed)?
        .iter()
        .map(|l| ring.linear_power(l, k))
        .collect::<Result<Vec<_>>>()?;
    use rayon::prelude::*;
    let degrees = (k..=system.top())
        .into_par_iter()
        .map(|t| best_of(forms.len(), |i| dual_mult_report(&system, &forms[i], t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SlpReport { k, report: wlp_report(grid, d, trials, degrees) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProbeDegree {
    pub t: usize,
    #[serde(rename = "dimFrom")]
    pub dim_from: usize,
    #[serde(rename = "dimTo")]
    pub dim_to: usize,
    #[serde(rename = "genericRank")]
    pub generic_rank: usize,
    #[serde(rename = "locusRank")]
    pub locus_rank: usize,
    #[serde(rename = "locusKer")]
    pub locus_kernel: usize,
    #[serde(rename = "locusCoker")]
    pub locus_coker: usize,
    /// The special form reaches the generic rank.
    #[serde(rename = "matchesGeneric")]
    pub matches_generic: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub grid: GridSummary,
    pub d: usize,
    pub prime: Option<u64>,
    pub trials: usize,
    pub locus: String,
    pub degrees: Vec<ProbeDegree>,
    /// Some degree where forms from the locus lose rank.
    #[serde(rename = "inNonLefschetzLocus")]
    pub in_non_lefschetz_locus: bool,
}

impl ProbeReport {
    pub fn degree(&self, t: usize) -> Option<&ProbeDegree> {
        self.degrees.iter().find(|r| r.t == t)
    }
}

/// Degrees inspected by [`non_lefschetz_probe`]: every degree when
/// `d <= a-1`, the pair `aq-2, aq-1` when `d = q(a-1)`.
pub fn probe_degrees(a: usize, d: usize, top: usize) -> Result<Vec<usize>> {
    if d == 0 {
        return Err(Error::InvalidDegree("d must be at least 1".into()));
    }
    if d <= a - 1 {
        return Ok((1..=top).collect());
    }
    if d % (a - 1) != 0 {
        return Err(Error::InvalidArgument(format!(
            "probes need d <= a-1 or (a-1) | d, got a = {a}, d = {d}"
        )));
    }
    let q = d / (a - 1);
    Ok(vec![a * q - 2, a * q - 1])
}

/// Compares forms dual to random points of `locus` with generic forms at
/// the degrees where a generic form has maximal rank.
pub fn non_lefschetz_probe<F: Field>(
    grid: &GridConfig<F>,
    d: usize,
    locus: Locus,
    trials: usize,
    seed: RandomSeed,
) -> Result<ProbeReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let spec = PowersIdealSpec::new(grid.clone(), d)?;
    // past d = a-1 only the probed degrees are needed
    let cap = probe_degrees(grid.a(), d, spec.degree_cap())?.into_iter().max().unwrap_or(0);
    let system = InverseSystem::compute(crate::ideals::GradedIdeal::ring(&spec), spec.generators(), cap)?;
    let degrees = probe_degrees(grid.a(), d, system.top())?;
    let mut generic = restrictions(grid, d, &generic_forms(grid, trials, seed)?)?;
    let special_forms = (0..trials)
        .map(|i| grid.sample_form(locus, &mut seed.stream("locus-form", i as u64)))
        .collect::<Result<Vec<_>>>()?;
    let mut special = restrictions(grid, d, &special_forms)?;
    let mut rows = Vec::new();
    for t in degrees {
        if t > system.top() && !system.is_complete() {
            continue;
        }
        let g = best_of(generic.len(), |i| generic[i].report(&system, t))?;
        // the best sample stands for a general member of the locus
        let s = best_of(special.len(), |i| special[i].report(&system, t))?;
        rows.push(ProbeDegree {
            t,
            dim_from: g.dim_from,
            dim_to: g.dim_to,
            generic_rank: g.rank,
            locus_rank: s.rank,
            locus_kernel: s.kernel_dim,
            locus_coker: s.coker_dim,
            matches_generic: s.rank == g.rank,
        });
    }
    Ok(ProbeReport {
        grid: GridSummary::of(grid),
        d,
        prime: grid.field().characteristic(),
        trials,
        locus: locus.to_string(),
        in_non_lefschetz_locus: rows.iter().any(|r| !r.matches_generic),
        degrees: rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BxSequence {
    pub a: usize,
    pub b: usize,
    #[serde(rename = "dMax")]
    pub d_max: usize,
    pub bits: Vec<u8>,
}

impl BxSequence {
    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|b| char::from(b'0' + b)).collect()
    }
}

/// `b_d = 1` when `R/Lambda_{X,d}` has the WLP, for `d = 1..=d_max`.
pub fn bx_sequence<F: Field>(grid: &GridConfig<F>, d_max: usize, trials: usize, seed: RandomSeed) -> Result<BxSequence> {
    if d_max == 0 {
        return Err(Error::InvalidDegree("dMax must be at least 1".into()));
    }
    let bits = (1..=d_max)
        .map(|d| Ok(u8::from(wlp_test(grid, d, trials, seed)?.verdict)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BxSequence { a: grid.a(), b: grid.b(), d_max, bits })
}

/// The matrix of `x l` on `A`, exposed for inspection.
pub fn mult_matrix<F: Field>(quotient: &GradedQuotient<F>, form: &PolyVector<F>, t: usize) -> Result<DenseMatrix<F>> {
    quotient.mult_matrix(form, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::geometry::GridParams;

    fn grid(a: usize, b: usize) -> GridConfig<PrimeField> {
        GridConfig::new(PrimeField::default(), a, b, GridParams::Random(RandomSeed(21))).unwrap()
    }

    fn generic(g: &GridConfig<PrimeField>) -> Point<PrimeField> {
        g.sample_form(Locus::Generic, &mut RandomSeed(1).stream("l", 0)).unwrap()
    }

    #[test]
    fn single_maps() {
        let g = grid(3, 3);
        let r = mult_map_analysis(&g, 3, &generic(&g), 3).unwrap();
        assert_eq!((r.dim_from, r.dim_to, r.coker_dim, r.kernel_dim, r.maximal_rank), (10, 11, 2, 1, false));
        let r = mult_map_analysis(&g, 4, &generic(&g), 5).unwrap();
        assert_eq!(r.coker_dim, 0);
        assert!(r.maximal_rank);
        let g = grid(3, 6);
        let r = mult_map_analysis(&g, 5, &generic(&g), 6).unwrap();
        assert_eq!(r.dim_to as i64 - r.dim_from as i64, -11);
        assert_eq!(r.coker_dim, 1);
        assert!(!r.maximal_rank);
    }

    #[test]
    fn restriction_matches_contraction() {
        for (a, b, d) in [(2, 2, 2), (3, 3, 3), (3, 4, 2), (3, 6, 5)] {
            let g = grid(a, b);
            let (spec, system) = artinian_dual(&g, d).unwrap();
            let ring = crate::ideals::GradedIdeal::ring(&spec);
            let points = [generic(&g), g.point(0, 1), g.sample_form(Locus::Lambda(0), &mut RandomSeed(4).stream("l", 1)).unwrap()];
            for l in points {
                let mut r = Restriction::new(&g, d, &l).unwrap();
                let form = ring.linear_form(&l).unwrap();
                for t in 1..=system.top() {
                    assert_eq!(r.report(&system, t).unwrap(), dual_mult_report(&system, &form, t).unwrap(), "{a}x{b} d={d} t={t}");
                }
            }
        }
    }

    #[test]
    fn zero_form_rejected() {
        let g = grid(2, 2);
        assert_eq!(mult_map_analysis(&g, 2, &[0; 4], 2).unwrap_err(), Error::ZeroForm);
    }

    #[test]
    fn report_identities() {
        for (from, to, rank) in [(10, 11, 9), (5, 5, 5), (7, 3, 3), (0, 4, 0)] {
            let r = MultMapReport::new(1, from, to, rank);
            assert!(r.identities_hold());
        }
        assert!(!MultMapReport::new(1, 10, 11, 9).maximal_rank);
    }

    #[test]
    fn wlp_verdicts() {
        let r = wlp_test(&grid(3, 3), 3, 3, RandomSeed(5)).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.failing, vec![3]);
        assert!(wlp_test(&grid(3, 3), 4, 3, RandomSeed(5)).unwrap().verdict);
        assert!(wlp_test(&grid(4, 4), 2, 3, RandomSeed(5)).unwrap().verdict);
        assert!(wlp_test(&grid(3, 3), 4, 0, RandomSeed(5)).is_err());
    }

    #[test]
    fn json_shape() {
        let r = wlp_test(&grid(3, 3), 3, 2, RandomSeed(5)).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"grid":{"a":3,"b":3,"u":["#));
        let keys = ["\"d\":3", "\"prime\":2147483647", "\"trials\":2", "\"degrees\":[{\"t\":1,\"dimFrom\":1,\"dimTo\":4,\"rank\":1,\"ker\":0,\"coker\":3,\"maximal\":true}"];
        for k in keys {
            assert!(s.contains(k), "{k} missing from {s}");
        }
        assert!(s.ends_with(r#""verdict":false,"failing":[3]}"#));
    }

    #[test]
    fn probes_on_three_by_three() {
        let g = grid(3, 3);
        let seed = RandomSeed(17);
        let plane = non_lefschetz_probe(&g, 4, Locus::Plane(0, 0), 3, seed).unwrap();
        assert_eq!(plane.degrees.iter().map(|r| r.t).collect::<Vec<_>>(), vec![4, 5]);
        assert!(!plane.in_non_lefschetz_locus);

        let chord = non_lefschetz_probe(&g, 4, Locus::Chord((0, 1), (1, 0)), 3, seed).unwrap();
        // the image of the projection from the chord has 8 points and
        // dim [I^(2)]_5 = 1 for them
        let t5 = chord.degree(5).unwrap();
        assert_eq!(t5.locus_coker, 1);
        assert!(chord.in_non_lefschetz_locus);

        let deep = non_lefschetz_probe(&g, 6, Locus::Plane(0, 0), 3, seed).unwrap();
        assert!(!deep.degree(8).unwrap().matches_generic);

        assert!(non_lefschetz_probe(&g, 3, Locus::Generic, 3, seed).is_err());
    }

    #[test]
    fn powers_of_forms() {
        for d in 1..=4 {
            for k in 1..=3 {
                let r = slp_probe(&grid(2, 2), d, k, 3, RandomSeed(2)).unwrap();
                assert!(r.report.verdict, "d={d} k={k}");
            }
        }
        let g = grid(3, 3);
        let one = slp_probe(&g, 3, 1, 3, RandomSeed(2)).unwrap();
        assert_eq!(one.report, wlp_test(&g, 3, 3, RandomSeed(2)).unwrap());
        let two = slp_probe(&g, 4, 2, 3, RandomSeed(2)).unwrap();
        assert_eq!(two.report.degrees.first().unwrap().t, 2);
    }

    #[test]
    fn small_bit_sequences() {
        assert_eq!(bx_sequence(&grid(3, 3), 6, 3, RandomSeed(4)).unwrap().bit_string(), "110101");
        assert_eq!(bx_sequence(&grid(2, 2), 5, 3, RandomSeed(4)).unwrap().bit_string(), "11111");
    }

    #[test]
    fn critical_degrees() {
        assert_eq!(probe_degrees(3, 4, 10).unwrap(), vec![4, 5]);
        assert_eq!(probe_degrees(3, 6, 10).unwrap(), vec![7, 8]);
        assert_eq!(probe_degrees(4, 3, 4).unwrap(), vec![1, 2, 3, 4]);
        assert!(probe_degrees(4, 4, 10).is_err());
    }
}
