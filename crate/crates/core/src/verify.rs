//! The reproduction suite: one named check per published claim, each
//! comparing brute-force computations with the stated values.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::config::FieldMode;
use crate::error::Result;
use crate::field::{Field, RandomSeed};
use crate::geometry::{projected_ci_forms, GridConfig, GridParams, Locus, Projection};
use crate::ideals::{
    bigraded_fat_points_piece, ci_power_dim_formula, fat_points_piece, hilbert_table, macaulay_dual_check,
    powers_ideal_piece, socle_dims, CiPowerIdeal, FatPointsSpec, GradedIdeal, HilbertKind, PerpIdeal, PowersIdealSpec,
};
use crate::lefschetz::{generic_cokernels, non_lefschetz_probe, wlp_test};
use crate::poly::{binom, Degree, GradingSpec, PolyRing};
use crate::predict::{coker_formula_geproci, compressed_gorenstein_hf, low_degree_ideal_dim, square_grid_wlp_verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: RandomSeed,
    pub trials: usize,
    /// Largest grid side allowed; checks needing bigger grids are skipped.
    pub max_side: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: crate::field::DEFAULT_SEED, trials: crate::config::DEFAULT_TRIALS, max_side: None }
    }
}

impl SuiteOptions {
    fn allows(&self, side: usize) -> bool {
        self.max_side.is_none_or(|m| side <= m)
    }

    /// The seed used for the second run of the determinism check.
    pub fn alternate_seed(&self) -> RandomSeed {
        RandomSeed(self.seed.0 ^ 0x9E37_79B9_7F4A_7C15)
    }
}

/// Result of one check. `values` holds every computed number, so runs under
/// different seeds or fields can be compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(skip)]
    pub values: Vec<i64>,
}

impl Outcome {
    fn from_pairs(pairs: &[(String, i64, i64)]) -> Self {
        let mut expected = String::new();
        let mut computed = String::new();
        for (label, e, c) in pairs {
            let _ = write!(expected, "{label}={e} ");
            let _ = write!(computed, "{label}={c} ");
        }
        Outcome {
            expected: expected.trim_end().to_string(),
            computed: computed.trim_end().to_string(),
            pass: pairs.iter().all(|(_, e, c)| e == c),
            values: pairs.iter().map(|p| p.2).collect(),
        }
    }

    /// Many cases that should all agree: the strings list only the cases
    /// that do not.
    fn from_cases(what: &str, pairs: &[(String, i64, i64)]) -> Self {
        let bad: Vec<&(String, i64, i64)> = pairs.iter().filter(|(_, e, c)| e != c).collect();
        let mut computed = format!("{} of {} {what} agree", pairs.len() - bad.len(), pairs.len());
        for (label, e, c) in bad.iter().take(8) {
            let _ = write!(computed, "; {label}: expected {e}, got {c}");
        }
        if bad.len() > 8 {
            let _ = write!(computed, "; ...");
        }
        Outcome {
            expected: format!("all {} {what} agree", pairs.len()),
            computed,
            pass: bad.is_empty(),
            values: pairs.iter().map(|p| p.2).collect(),
        }
    }

    fn empty() -> Self {
        Outcome { expected: "nothing in range".into(), computed: "nothing in range".into(), pass: true, values: Vec::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Criterion {
    SquareGridSweep,
    WorkedExample,
    GorensteinApolarity,
    CokernelFormula,
    MacaulayDuality,
    IndependentConditions,
    NoSyzygyWindow,
    NonLefschetzProbes,
    CiPowers,
    RecursionIdentity,
    Determinism,
}

impl Criterion {
    pub const ALL: [Criterion; 11] = [
        Criterion::SquareGridSweep,
        Criterion::WorkedExample,
        Criterion::GorensteinApolarity,
        Criterion::CokernelFormula,
        Criterion::MacaulayDuality,
        Criterion::IndependentConditions,
        Criterion::NoSyzygyWindow,
        Criterion::NonLefschetzProbes,
        Criterion::CiPowers,
        Criterion::RecursionIdentity,
        Criterion::Determinism,
    ];

    pub fn number(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).expect("listed") + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::SquareGridSweep => "wlp-square-grid-sweep",
            Criterion::WorkedExample => "three-by-six-example",
            Criterion::GorensteinApolarity => "gorenstein-apolarity",
            Criterion::CokernelFormula => "cokernel-formula",
            Criterion::MacaulayDuality => "macaulay-duality",
            Criterion::IndependentConditions => "independent-conditions",
            Criterion::NoSyzygyWindow => "no-syzygy-window",
            Criterion::NonLefschetzProbes => "non-lefschetz-probes",
            Criterion::CiPowers => "ci-powers",
            Criterion::RecursionIdentity => "recursion-identity",
            Criterion::Determinism => "determinism-and-modes",
        }
    }

    /// Runs a check other than [`Criterion::Determinism`], which compares
    /// whole runs and lives in [`determinism`].
    pub fn run<F: Field>(self, field: &F, opts: &SuiteOptions) -> Result<Outcome> {
        match self {
            Criterion::SquareGridSweep => square_grid_sweep(field, opts),
            Criterion::WorkedExample => worked_example(field, opts),
            Criterion::GorensteinApolarity => gorenstein_apolarity(field, opts),
            Criterion::CokernelFormula => cokernel_formula(field, opts),
            Criterion::MacaulayDuality => macaulay_duality(field, opts),
            Criterion::IndependentConditions => independent_conditions(field, opts),
            Criterion::NoSyzygyWindow => no_syzygy_window(field, opts),
            Criterion::NonLefschetzProbes => non_lefschetz_probes(field, opts),
            Criterion::CiPowers => ci_powers(field, opts),
            Criterion::RecursionIdentity => recursion_identity(field, opts),
            Criterion::Determinism => Err(crate::error::Error::InvalidArgument(
                "the determinism check compares whole runs; use verify::determinism".into(),
            )),
        }
    }
}

fn square<F: Field>(field: &F, a: usize, seed: RandomSeed) -> Result<GridConfig<F>> {
    GridConfig::new(field.clone(), a, a, GridParams::Random(seed))
}

fn grid<F: Field>(field: &F, a: usize, b: usize, seed: RandomSeed) -> Result<GridConfig<F>> {
    GridConfig::new(field.clone(), a, b, GridParams::Random(seed))
}

pub fn square_grid_sweep<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    let mut pairs = Vec::new();
    for a in (3..=5).filter(|&a| opts.allows(a)) {
        let g = square(field, a, opts.seed)?;
        for d in 1..=3 * (a - 1) {
            let verdict = wlp_test(&g, d, opts.trials, opts.seed)?.verdict;
            let expected = square_grid_wlp_verdict(a as i64, d as i64);
            pairs.push((format!("a={a},d={d}"), i64::from(expected), i64::from(verdict)));
        }
    }
    if pairs.is_empty() {
        return Ok(Outcome::empty());
    }
    let bits = |pick: fn(&(String, i64, i64)) -> i64| {
        let mut s = String::new();
        let mut last_a = "";
        for p in &pairs {
            let a = p.0.split(',').next().unwrap_or("");
            if a != last_a {
                let _ = write!(s, "{}{a}:", if s.is_empty() { "" } else { " " });
                last_a = a;
            }
            s.push(if pick(p) == 1 { '1' } else { '0' });
        }
        s
    };
    Ok(Outcome {
        expected: bits(|p| p.1),
        computed: bits(|p| p.2),
        pass: pairs.iter().all(|p| p.1 == p.2),
        values: pairs.iter().map(|p| p.2).collect(),
    })
}

pub fn worked_example<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    if !opts.allows(6) {
        return Ok(Outcome::empty());
    }
    let g = grid(field, 3, 6, opts.seed)?;
    let p3 = PolyRing::new(field.clone(), GradingSpec::P3);
    let p1p1 = PolyRing::new(field.clone(), GradingSpec::P1XP1);
    let simple = FatPointsSpec::grid(&g, 1)?;
    let i4 = fat_points_piece(&p3, &simple, Degree::Total(4))?.dim() as i64;
    let i5 = fat_points_piece(&p3, &simple, Degree::Total(5))?.dim() as i64;
    let z2 = bigraded_fat_points_piece(&p1p1, &FatPointsSpec::bigraded_grid(&g, 2)?, 6, 6)?.dim() as i64;
    let report = wlp_test(&g, 5, opts.trials, opts.seed)?;
    let at6 = report.degree(6).expect("degree 6 is below the socle degree");
    let delta6 = at6.dim_to as i64 - at6.dim_from as i64;
    let fails_at_6 = i64::from(report.failing.contains(&6));
    Ok(Outcome::from_pairs(&[
        ("dim[I_X]_4".into(), 17, i4),
        ("dim[I_X]_5".into(), 38, i5),
        ("dim[I_Z^(2)]_(6,6)".into(), 10, z2),
        ("delta_h(6)".into(), -11, delta6),
        ("coker(6)".into(), 1, at6.coker_dim as i64),
        ("fails_at_6".into(), 1, fails_at_6),
    ]))
}

pub fn gorenstein_apolarity<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    let ring = PolyRing::new(field.clone(), GradingSpec::P3);
    let mut pairs = Vec::new();
    for t in (1..=3).filter(|&t| opts.allows(t + 2)) {
        let y = square(field, t + 2, opts.seed)?;
        let q = y.quadric(&ring)?;
        let perp = PerpIdeal::new(ring.clone(), ring.pow(&q, t)?)?;
        let table = hilbert_table(&perp, 2 * t + 1, HilbertKind::Quotient)?;
        let expected = compressed_gorenstein_hf(t);
        for s in 0..=2 * t + 1 {
            let e = expected.get(s).unwrap_or(0) as i64;
            pairs.push((format!("t={t}:h({s})"), e, table.get(s).expect("computed") as i64));
        }
        let powers = PowersIdealSpec::new(y, t + 1)?;
        for s in 0..=2 * t + 1 {
            let lhs = powers_ideal_piece(&powers, s)?.dim() as i64;
            let rhs = table_ideal_dim(&ring, &table, s);
            pairs.push((format!("t={t}:dim[Lambda]_{s}"), rhs, lhs));
        }
    }
    if pairs.is_empty() {
        return Ok(Outcome::empty());
    }
    Ok(Outcome::from_cases("values", &pairs))
}

fn table_ideal_dim<F: Field>(ring: &PolyRing<F>, table: &crate::ideals::HilbertTable, s: usize) -> i64 {
    (ring.dim(Degree::Total(s)) - table.get(s).expect("computed")) as i64
}

pub fn cokernel_formula<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    let mut pairs = Vec::new();
    for a in (3..=4).filter(|&a| opts.allows(a)) {
        let g = square(field, a, opts.seed)?;
        for d in a - 1..=3 * (a - 1) {
            let q = d / (a - 1);
            let degrees: Vec<usize> = (d..=d + q).collect();
            let measured = generic_cokernels(&g, d, &degrees, opts.trials, opts.seed)?;
            for (t, m) in (0..=q).zip(measured) {
                let Some(predicted) = coker_formula_geproci(a as i64, a as i64, d as i64, t as i64) else { continue };
                pairs.push((format!("a={a},d={d},t={t}"), predicted, m as i64));
            }
        }
    }
    if pairs.is_empty() {
        return Ok(Outcome::empty());
    }
    Ok(Outcome::from_cases("cokernels", &pairs))
}

/// Square and rectangular shapes with both sides in `2..=max`, `a <= b`.
fn shapes(max: usize, opts: &SuiteOptions) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 2..=max {
        for b in a..=max {
            if opts.allows(b) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn macaulay_duality<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    let mut pairs = Vec::new();
    for (a, b) in shapes(4, opts) {
        let g = grid(field, a, b, opts.seed)?;
        for d in 1..=6 {
            for t in d..=d + 3 {
                let c = macaulay_dual_check(&g, d, t)?;
                pairs.push((format!("{a}x{b},d={d},t={t}"), c.rhs as i64, c.lhs as i64));
            }
        }
    }
    Ok(Outcome::from_cases("dimension pairs", &pairs))
}

pub fn independent_conditions<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    let p3 = PolyRing::new(field.clone(), GradingSpec::P3);
    let p1p1 = PolyRing::new(field.clone(), GradingSpec::P1XP1);
    let mut pairs = Vec::new();
    for (a, b) in shapes(4, opts) {
        let g = grid(field, a, b, opts.seed)?;
        for d in 1..=3 {
            let t = b * d - 1;
            let fat = FatPointsSpec::grid(&g, d)?;
            let h_x = p3.dim(Degree::Total(t)) - fat_points_piece(&p3, &fat, Degree::Total(t))?.dim();
            pairs.push((format!("{a}x{b},d={d}:h_X"), (a * b * binom(d + 2, 3)) as i64, h_x as i64));
            let z = FatPointsSpec::bigraded_grid(&g, d)?;
            let h_z = p1p1.dim(Degree::Bi(t, t)) - bigraded_fat_points_piece(&p1p1, &z, t, t)?.dim();
            pairs.push((format!("{a}x{b},d={d}:h_Z"), (a * b * binom(d + 1, 2)) as i64, h_z as i64));
        }
    }
    Ok(Outcome::from_cases("Hilbert function values", &pairs))
}

pub fn no_syzygy_window<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    if !opts.allows(3) {
        return Ok(Outcome::empty());
    }
    let spec = PowersIdealSpec::new(square(field, 3, opts.seed)?, 4)?;
    let mut pairs = Vec::new();
    for t in 4..=5 {
        let expected = low_degree_ideal_dim(3, 3, 4, t).expect("inside the window");
        pairs.push((format!("dim[I]_{t}"), expected, powers_ideal_piece(&spec, t as usize)?.dim() as i64));
    }
    for (t, s) in socle_dims(&spec, 4)?.into_iter().enumerate() {
        pairs.push((format!("socle_{t}"), 0, s as i64));
    }
    Ok(Outcome::from_pairs(&pairs))
}

pub fn non_lefschetz_probes<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    if !opts.allows(3) {
        return Ok(Outcome::empty());
    }
    let g = square(field, 3, opts.seed)?;
    let (trials, seed) = (opts.trials, opts.seed);
    let mut pairs = Vec::new();
    let small_loci = [
        Locus::Generic,
        Locus::Plane(0, 0),
        Locus::Plane(1, 2),
        Locus::Lambda(0),
        Locus::Mu(1),
        Locus::Chord((0, 1), (1, 0)),
    ];
    for d in 1..=2 {
        for locus in small_loci {
            let r = non_lefschetz_probe(&g, d, locus, trials, seed)?;
            pairs.push((format!("d={d},{locus}:fails"), 0, i64::from(r.in_non_lefschetz_locus)));
        }
    }
    for (i, j) in g.indices() {
        let r = non_lefschetz_probe(&g, 4, Locus::Plane(i, j), trials, seed)?;
        pairs.push((format!("d=4,{}:fails", Locus::Plane(i, j)), 0, i64::from(r.in_non_lefschetz_locus)));
    }
    for chord in [Locus::Chord((0, 1), (1, 0)), Locus::Chord((0, 0), (1, 1)), Locus::Chord((1, 2), (2, 0))] {
        let r = non_lefschetz_probe(&g, 4, chord, trials, seed)?;
        let at5 = r.degree(5).expect("probed");
        pairs.push((format!("d=4,{chord}:surjective_at_5"), 0, i64::from(at5.locus_coker == 0)));
        pairs.push((format!("d=4,{chord}:coker_at_5"), 9, at5.locus_coker as i64));
    }
    for ruling in [Locus::Lambda(0), Locus::Mu(2)] {
        let r = non_lefschetz_probe(&g, 4, ruling, trials, seed)?;
        pairs.push((format!("d=4,{ruling}:fails"), 1, i64::from(r.in_non_lefschetz_locus)));
    }
    let r = non_lefschetz_probe(&g, 6, Locus::Plane(0, 0), trials, seed)?;
    let at8 = r.degree(8).expect("probed");
    pairs.push(("d=6,plane(1,1):fails_at_8".into(), 1, i64::from(!at8.matches_generic)));
    Ok(Outcome::from_cases("probe results", &pairs))
}

pub fn ci_powers<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    let plane = PolyRing::new(field.clone(), GradingSpec::P2);
    let mut pairs = Vec::new();
    for (a, b) in [(3, 3), (3, 4)].into_iter().filter(|&(_, b)| opts.allows(b)) {
        let g = grid(field, a, b, opts.seed)?;
        let mut rng = opts.seed.stream("projection", 0);
        let center = g.sample_point(Locus::Generic, &mut rng)?;
        let projection = Projection::to_random_plane(field.clone(), center, &mut rng)?;
        let (f, h) = projected_ci_forms(&g, &projection, &plane)?;
        for m in 1..=3 {
            let ideal = CiPowerIdeal::new(plane.clone(), &f, &h, m)?;
            for t in 0..=12 {
                let dim = ideal.piece_dim(t)? as i64;
                let formula = ci_power_dim_formula(a as i64, b as i64, m as i64, t as i64);
                pairs.push((format!("({a},{b}),m={m},t={t}"), formula, dim));
            }
        }
    }
    if pairs.is_empty() {
        return Ok(Outcome::empty());
    }
    Ok(Outcome::from_cases("dimensions", &pairs))
}

pub fn recursion_identity<F: Field>(field: &F, opts: &SuiteOptions) -> Result<Outcome> {
    let p3 = PolyRing::new(field.clone(), GradingSpec::P3);
    let p1p1 = PolyRing::new(field.clone(), GradingSpec::P1XP1);
    let mut pairs = Vec::new();
    for a in 2..=3 {
        for b in (a..=6).filter(|&b| opts.allows(b)) {
            let g = grid(field, a, b, opts.seed)?;
            for alpha in 1..=3 {
                let fat = FatPointsSpec::grid(&g, alpha)?;
                let lower = (alpha > 1).then(|| FatPointsSpec::grid(&g, alpha - 1)).transpose()?;
                let z = FatPointsSpec::bigraded_grid(&g, alpha)?;
                for t in 0..=8usize {
                    let lhs = fat_points_piece(&p3, &fat, Degree::Total(t))?.dim() as i64;
                    let below = match (&lower, t.checked_sub(2)) {
                        (_, None) => 0,
                        (None, Some(s)) => p3.dim(Degree::Total(s)),
                        (Some(l), Some(s)) => fat_points_piece(&p3, l, Degree::Total(s))?.dim(),
                    } as i64;
                    let on_quadric = bigraded_fat_points_piece(&p1p1, &z, t, t)?.dim() as i64;
                    pairs.push((format!("{a}x{b},alpha={alpha},t={t}"), below + on_quadric, lhs));
                }
            }
        }
    }
    if pairs.is_empty() {
        return Ok(Outcome::empty());
    }
    Ok(Outcome::from_cases("identities", &pairs))
}

/// Side of the grids used for the rational comparison.
pub const RATIONAL_SUBSET_SIDE: usize = 3;

/// Checks whose grids have sides at most [`RATIONAL_SUBSET_SIDE`] and whose
/// values are compared between prime and rational arithmetic.
pub const RATIONAL_SUBSET: [Criterion; 6] = [
    Criterion::SquareGridSweep,
    Criterion::GorensteinApolarity,
    Criterion::CokernelFormula,
    Criterion::NoSyzygyWindow,
    Criterion::NonLefschetzProbes,
    Criterion::CiPowers,
];

/// Compares two runs of the same checks: under `opts.seed` (given as
/// `first`) and under the alternate seed, then the small-grid subset in
/// prime and rational arithmetic.
pub fn determinism<F: Field>(
    field: &F,
    opts: &SuiteOptions,
    first: &[(Criterion, Outcome)],
) -> Result<Outcome> {
    let other = SuiteOptions { seed: opts.alternate_seed(), ..*opts };
    let mut pairs = Vec::new();
    for (c, outcome) in first {
        let again = c.run(field, &other)?;
        let same = outcome.values == again.values && outcome.pass == again.pass;
        pairs.push((format!("seeds:{}", c.name()), 1, i64::from(same)));
    }
    let small = SuiteOptions { max_side: Some(RATIONAL_SUBSET_SIDE), ..*opts };
    let rational = crate::field::RationalField;
    for c in RATIONAL_SUBSET {
        let p = c.run(field, &small)?;
        let q = c.run(&rational, &small)?;
        pairs.push((format!("modes:{}", c.name()), 1, i64::from(p.values == q.values)));
    }
    Ok(Outcome::from_cases("comparisons", &pairs))
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub number: usize,
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub seconds: f64,
}

impl Check {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2} {:<24} {:>8.2}s  expected: {} | computed: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.number,
            self.name,
            self.seconds,
            self.expected,
            self.computed
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed().as_secs_f64()))
}

/// Runs every check. In rational mode, or when `max_side` is set, the
/// determinism check is skipped.
pub fn run_suite(mode: FieldMode, opts: &SuiteOptions, mut progress: impl FnMut(&Check)) -> Result<SuiteResult> {
    let start = Instant::now();
    let mut checks = Vec::new();
    crate::with_field!(mode, |field| {
        let mut outcomes = Vec::new();
        for c in Criterion::ALL.into_iter().filter(|&c| c != Criterion::Determinism) {
            let (outcome, seconds) = timed(|| c.run(&field, opts))?;
            let check = Check {
                number: c.number(),
                name: c.name(),
                expected: outcome.expected.clone(),
                computed: outcome.computed.clone(),
                pass: outcome.pass,
                seconds,
            };
            progress(&check);
            checks.push(check);
            outcomes.push((c, outcome));
        }
        if matches!(mode, FieldMode::Prime(_)) && opts.max_side.is_none() {
            let (outcome, seconds) = timed(|| determinism(&field, opts, &outcomes))?;
            let c = Criterion::Determinism;
            let check = Check {
                number: c.number(),
                name: c.name(),
                expected: outcome.expected,
                computed: outcome.computed,
                pass: outcome.pass,
                seconds,
            };
            progress(&check);
            checks.push(check);
        }
    });
    Ok(SuiteResult { checks, seconds: start.elapsed().as_secs_f64() })
}
