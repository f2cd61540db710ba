//! The subcommands behind the `gridlef` binary. Each returns the rendered
//! output and an exit status, so the binary only parses flags and prints.

use std::fmt::Write as _;

use serde::Serialize;

use crate::config::{FieldMode, OutputFormat, RunConfig};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::Locus;
use crate::ideals::HilbertKind;
use crate::lefschetz::{artinian_dual, bx_sequence, non_lefschetz_probe, wlp_test, GridSummary, ProbeReport, WlpReport};
use crate::predict::coker_formula_geproci;
use crate::verify::{run_suite, Check, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Exit status for an error: guards get 3, everything else is a usage error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::PrimeTooSmall { .. } | Error::DimensionCap { .. } | Error::ModulusTooLarge(_) => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

/// A message for stderr, with a hint for the guards.
pub fn error_message(err: &Error) -> String {
    match err {
        Error::PrimeTooSmall { .. } => format!("error: {err}\nhint: prime too small; use a larger --prime or --rational"),
        Error::DimensionCap { .. } => format!("error: {err}\nhint: the graded pieces are too large; use a smaller grid or degree"),
        _ => format!("error: {err}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: EXIT_OK }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn grid_line(g: &GridSummary) -> String {
    let list = |xs: &[serde_json::Value]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    format!("grid {}x{}  u=[{}]  v=[{}]", g.a, g.b, list(&g.u), list(&g.v))
}

fn field_line(prime: Option<u64>, trials: usize) -> String {
    match prime {
        Some(p) => format!("field F_{p}  trials {trials}"),
        None => format!("field Q  trials {trials}"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn wlp_report(cfg: &RunConfig) -> Result<WlpReport> {
    let d = cfg.d()?;
    crate::with_field!(cfg.field, |f| wlp_test(&cfg.grid(f)?, d, cfg.trials, cfg.seed))
}

pub fn cmd_wlp(cfg: &RunConfig) -> Result<Output> {
    cfg.validate()?;
    let r = wlp_report(cfg)?;
    let text = match cfg.format {
        OutputFormat::Json => json(&r),
        OutputFormat::Csv => {
            let mut s = String::from("t,dimFrom,dimTo,rank,ker,coker,maximal\n");
            for m in &r.degrees {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    m.t, m.dim_from, m.dim_to, m.rank, m.kernel_dim, m.coker_dim, m.maximal_rank
                );
            }
            s
        }
        OutputFormat::Table => {
            let mut s = format!("{}\n{}\nd {}\n\n", grid_line(&r.grid), field_line(r.prime, r.trials), r.d);
            let _ = writeln!(s, "{:>4} {:>8} {:>8} {:>8} {:>6} {:>6}  maximal", "t", "dimFrom", "dimTo", "rank", "ker", "coker");
            for m in &r.degrees {
                let _ = writeln!(
                    s,
                    "{:>4} {:>8} {:>8} {:>8} {:>6} {:>6}  {}",
                    m.t,
                    m.dim_from,
                    m.dim_to,
                    m.rank,
                    m.kernel_dim,
                    m.coker_dim,
                    yes_no(m.maximal_rank)
                );
            }
            let failing = r.failing.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let _ = writeln!(s, "\nverdict {}  failing [{failing}]", if r.verdict { "WLP" } else { "no WLP" });
            s
        }
    };
    Ok(Output::ok(text))
}

#[derive(Debug, Serialize)]
struct HfJson {
    grid: GridSummary,
    d: usize,
    prime: Option<u64>,
    kind: HilbertKind,
    rows: Vec<crate::ideals::HilbertRow>,
}

pub fn cmd_hf(cfg: &RunConfig) -> Result<Output> {
    cfg.validate()?;
    let d = cfg.d()?;
    let (summary, prime, table) = crate::with_field!(cfg.field, |f| {
        let grid = cfg.grid(f)?;
        let (_, system) = artinian_dual(&grid, d)?;
        (GridSummary::of(&grid), grid.field().characteristic(), system.hilbert_table())
    });
    let text = match cfg.format {
        OutputFormat::Csv => table.to_csv(),
        OutputFormat::Json => json(&HfJson { grid: summary, d, prime, kind: table.kind, rows: table.rows() }),
        OutputFormat::Table => {
            let mut s = format!("{}\n{}\nd {}\n\n", grid_line(&summary), field_line(prime, cfg.trials), d);
            let _ = writeln!(s, "{:>4} {:>8} {:>8}", "t", "dim", "delta");
            for r in table.rows() {
                let _ = writeln!(s, "{:>4} {:>8} {:>8}", r.t, r.dim, r.delta);
            }
            s
        }
    };
    Ok(Output::ok(text))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CokerComparison {
    pub a: usize,
    pub b: usize,
    pub d: usize,
    pub t: usize,
    pub measured: usize,
    pub predicted: Option<i64>,
    pub applicable: bool,
}

/// Measured cokernel of `x l : A_{t-1} -> A_t` against the closed formula
/// at `t - d`, which applies when `t >= d` and its degree condition holds.
pub fn coker_comparison(cfg: &RunConfig) -> Result<CokerComparison> {
    let d = cfg.d()?;
    let t = cfg.t.ok_or_else(|| Error::InvalidArgument("--t is required".into()))?;
    if t == 0 {
        return Err(Error::InvalidDegree("--t must be at least 1".into()));
    }
    let r = wlp_report(cfg)?;
    let measured = r.degree(t).map_or(0, |m| m.coker_dim);
    let (a, b) = (r.grid.a, r.grid.b);
    let predicted = if t >= d { coker_formula_geproci(a as i64, b as i64, d as i64, (t - d) as i64) } else { None };
    Ok(CokerComparison { a, b, d, t, measured, predicted, applicable: predicted.is_some() })
}

pub fn cmd_coker(cfg: &RunConfig) -> Result<Output> {
    cfg.validate()?;
    let c = coker_comparison(cfg)?;
    let predicted = c.predicted.map_or_else(|| "n/a".to_string(), |p| p.to_string());
    let text = match cfg.format {
        OutputFormat::Json => json(&c),
        OutputFormat::Csv => format!(
            "a,b,d,t,measured,predicted,applicable\n{},{},{},{},{},{},{}\n",
            c.a,
            c.b,
            c.d,
            c.t,
            c.measured,
            c.predicted.map_or(String::new(), |p| p.to_string()),
            c.applicable
        ),
        OutputFormat::Table => format!(
            "grid {}x{}  d {}  t {}\nmeasured   {}\npredicted  {}\napplicable {}\n",
            c.a,
            c.b,
            c.d,
            c.t,
            c.measured,
            predicted,
            yes_no(c.applicable)
        ),
    };
    Ok(Output::ok(text))
}

pub fn cmd_nll(cfg: &RunConfig, locus: Locus) -> Result<Output> {
    cfg.validate()?;
    let d = cfg.d()?;
    let r: ProbeReport =
        crate::with_field!(cfg.field, |f| non_lefschetz_probe(&cfg.grid(f)?, d, locus, cfg.trials, cfg.seed)?);
    let text = match cfg.format {
        OutputFormat::Json => json(&r),
        OutputFormat::Csv => {
            let mut s = String::from("t,dimFrom,dimTo,genericRank,locusRank,locusKer,locusCoker,matchesGeneric\n");
            for p in &r.degrees {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    p.t, p.dim_from, p.dim_to, p.generic_rank, p.locus_rank, p.locus_kernel, p.locus_coker, p.matches_generic
                );
            }
            s
        }
        OutputFormat::Table => {
            let mut s = format!(
                "{}\n{}\nd {}  locus {}\n\n",
                grid_line(&r.grid),
                field_line(r.prime, r.trials),
                r.d,
                r.locus
            );
            let _ = writeln!(
                s,
                "{:>4} {:>8} {:>8} {:>8} {:>8} {:>6} {:>6}  matches",
                "t", "dimFrom", "dimTo", "generic", "locus", "ker", "coker"
            );
            for p in &r.degrees {
                let _ = writeln!(
                    s,
                    "{:>4} {:>8} {:>8} {:>8} {:>8} {:>6} {:>6}  {}",
                    p.t,
                    p.dim_from,
                    p.dim_to,
                    p.generic_rank,
                    p.locus_rank,
                    p.locus_kernel,
                    p.locus_coker,
                    yes_no(p.matches_generic)
                );
            }
            let _ = writeln!(s, "\nin non-Lefschetz locus: {}", yes_no(r.in_non_lefschetz_locus));
            s
        }
    };
    Ok(Output::ok(text))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BxOutput {
    pub a: usize,
    pub b: usize,
    #[serde(rename = "dMax")]
    pub d_max: usize,
    pub bits: String,
    /// First `d` whose bit is not covered by a proven statement, for
    /// non-square grids.
    #[serde(rename = "conjecturalFrom")]
    pub conjectural_from: Option<usize>,
}

pub fn bx_output(cfg: &RunConfig, d_max: usize) -> Result<BxOutput> {
    let seq = crate::with_field!(cfg.field, |f| bx_sequence(&cfg.grid(f)?, d_max, cfg.trials, cfg.seed)?);
    let conjectural_from = (seq.a != seq.b && d_max >= seq.a).then_some(seq.a);
    Ok(BxOutput { a: seq.a, b: seq.b, d_max, bits: seq.bit_string(), conjectural_from })
}

pub fn cmd_bx(cfg: &RunConfig, d_max: usize) -> Result<Output> {
    cfg.validate()?;
    let bx = bx_output(cfg, d_max)?;
    let text = match cfg.format {
        OutputFormat::Json => json(&bx),
        OutputFormat::Csv => {
            let mut s = String::from("d,bit,conjectural\n");
            for (i, c) in bx.bits.chars().enumerate() {
                let d = i + 1;
                let _ = writeln!(s, "{d},{c},{}", bx.conjectural_from.is_some_and(|from| d >= from));
            }
            s
        }
        OutputFormat::Table => {
            let mut s = format!("grid {}x{}  dMax {}\nbits {}\n", bx.a, bx.b, bx.d_max, bx.bits);
            if let Some(from) = bx.conjectural_from {
                let _ = writeln!(s, "conjectural region: d >= {from}");
            }
            s
        }
    };
    Ok(Output::ok(text))
}

/// Largest grid side used by the full suite.
pub const SUITE_MAX_SIDE: usize = 6;

#[derive(Debug, Serialize)]
struct SuiteJson<'a> {
    prime: Option<u64>,
    seed: u64,
    trials: usize,
    checks: &'a [Check],
    passed: bool,
    seconds: f64,
}

/// Runs the reproduction suite. `progress` sees each check as it finishes.
pub fn cmd_verify_paper(cfg: &RunConfig, a_max: Option<usize>, progress: impl FnMut(&Check)) -> Result<Output> {
    if cfg.trials == 0 {
        return Err(Error::InvalidArgument("--trials must be at least 1".into()));
    }
    if let FieldMode::Prime(p) = cfg.field {
        p.check_grid_size(a_max.unwrap_or(SUITE_MAX_SIDE) as u64)?;
    }
    let opts = SuiteOptions { seed: cfg.seed, trials: cfg.trials, max_side: a_max };
    let result = run_suite(cfg.field, &opts, progress)?;
    let passed = result.passed();
    let text = match cfg.format {
        OutputFormat::Json => json(&SuiteJson {
            prime: cfg.prime(),
            seed: cfg.seed.0,
            trials: cfg.trials,
            checks: &result.checks,
            passed,
            seconds: result.seconds,
        }),
        OutputFormat::Csv => {
            let mut s = String::from("number,name,pass,seconds,expected,computed\n");
            for c in &result.checks {
                let _ = writeln!(
                    s,
                    "{},{},{},{:.3},\"{}\",\"{}\"",
                    c.number, c.name, c.pass, c.seconds, c.expected, c.computed
                );
            }
            s
        }
        OutputFormat::Table => {
            let mut s = String::new();
            for c in &result.checks {
                let _ = writeln!(s, "{}", c.line());
            }
            let failed = result.checks.iter().filter(|c| !c.pass).count();
            let _ = writeln!(
                s,
                "\n{} of {} checks passed in {:.1}s",
                result.checks.len() - failed,
                result.checks.len(),
                result.seconds
            );
            s
        }
    };
    Ok(Output { text, status: if passed { EXIT_OK } else { EXIT_CHECK_FAILED } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(a: usize, b: usize, d: usize) -> RunConfig {
        RunConfig { a, b, d: Some(d), ..RunConfig::default() }
    }

    #[test]
    fn coker_examples() {
        let c = coker_comparison(&RunConfig { t: Some(3), ..cfg(3, 3, 3) }).unwrap();
        assert_eq!((c.measured, c.predicted), (2, Some(2)));
        let c = coker_comparison(&RunConfig { t: Some(5), ..cfg(3, 3, 4) }).unwrap();
        assert_eq!((c.measured, c.predicted), (0, Some(0)));
        let c = coker_comparison(&RunConfig { t: Some(2), ..cfg(3, 3, 4) }).unwrap();
        assert!(!c.applicable);
    }

    #[test]
    fn bx_flags_the_open_region() {
        let bx = bx_output(&cfg(3, 4, 1), 4).unwrap();
        assert_eq!(bx.conjectural_from, Some(3));
        assert!(bx.bits.starts_with("11"));
        assert_eq!(bx_output(&cfg(2, 2, 1), 4).unwrap().conjectural_from, None);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::PrimeTooSmall { p: 101, bound: 162, size: 3 }), EXIT_GUARD);
        assert_eq!(exit_code(&Error::DimensionCap { cols: 10, cap: 5 }), EXIT_GUARD);
        assert_eq!(exit_code(&Error::InvalidArgument("x".into())), EXIT_USAGE);
        let small = RunConfig { field: crate::config::parse_prime("101").unwrap(), ..cfg(3, 3, 2) };
        let err = cmd_wlp(&small).unwrap_err();
        assert!(error_message(&err).contains("prime too small"));
    }

    #[test]
    fn formats_agree() {
        let base = cfg(3, 3, 2);
        let table = cmd_hf(&base).unwrap().text;
        let csv = cmd_hf(&RunConfig { format: OutputFormat::Csv, ..base.clone() }).unwrap().text;
        assert_eq!(csv, "t,dim,delta\n0,1,1\n1,4,3\n2,1,-3\n3,0,-1\n");
        assert!(table.contains("   2        1       -3"));
        let text = cmd_wlp(&RunConfig { format: OutputFormat::Json, ..cfg(3, 3, 3) }).unwrap().text;
        let j: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(j["verdict"], false);
        let at: Vec<usize> = ["\"grid\"", "\"d\"", "\"prime\"", "\"trials\"", "\"degrees\"", "\"verdict\"", "\"failing\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]));
    }
}
