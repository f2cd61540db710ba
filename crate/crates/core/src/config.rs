//! Run configuration shared by the command line and the examples.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, PrimeModulus, RandomSeed, DEFAULT_SEED};
use crate::geometry::{GridConfig, GridParams};

pub const DEFAULT_TRIALS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?} (expected table, json or csv)"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Table => "table",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

/// Explicit integer grid parameters, written `u=1,2,3;v=1,2,3,4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamsOverride {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
}

impl ParamsOverride {
    pub fn largest(&self) -> u64 {
        self.u.iter().chain(&self.v).map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }
}

impl FromStr for ParamsOverride {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidArgument(format!("bad --params {s:?}: {msg}"));
        let mut u = None;
        let mut v = None;
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, list) = part.split_once('=').ok_or_else(|| bad("expected key=list"))?;
            let values = list
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| bad("values must be integers")))
                .collect::<Result<Vec<_>>>()?;
            match key.trim() {
                "u" => u = Some(values),
                "v" => v = Some(values),
                _ => return Err(bad("keys are u and v")),
            }
        }
        match (u, v) {
            (Some(u), Some(v)) => Ok(ParamsOverride { u, v }),
            _ => Err(bad("both u and v are required")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldMode {
    Prime(PrimeModulus),
    Rational,
}

impl Default for FieldMode {
    fn default() -> Self {
        FieldMode::Prime(PrimeModulus::default())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub a: usize,
    pub b: usize,
    pub d: Option<usize>,
    pub t: Option<usize>,
    pub field: FieldMode,
    pub trials: usize,
    pub seed: RandomSeed,
    pub params: Option<ParamsOverride>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            a: 3,
            b: 3,
            d: None,
            t: None,
            field: FieldMode::default(),
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            params: None,
            format: OutputFormat::Table,
            out: None,
        }
    }
}

impl RunConfig {
    /// Checks the grid shape, explicit parameters, trial count and the size
    /// of the prime.
    pub fn validate(&self) -> Result<()> {
        if self.a < 2 || self.b < 2 {
            return Err(Error::InvalidGrid(format!("grid dimensions must be at least 2, got {}x{}", self.a, self.b)));
        }
        if self.trials == 0 {
            return Err(Error::InvalidArgument("--trials must be at least 1".into()));
        }
        if let Some(p) = &self.params {
            if p.u.len() != self.a || p.v.len() != self.b {
                return Err(Error::InvalidGrid(format!(
                    "--params gives {}x{} values for a {}x{} grid",
                    p.u.len(),
                    p.v.len(),
                    self.a,
                    self.b
                )));
            }
        }
        if let FieldMode::Prime(p) = self.field {
            p.check_grid_size(self.grid_size())?;
        }
        Ok(())
    }

    /// Size used for the prime guard: the larger grid dimension, or the
    /// largest explicit parameter when that is bigger.
    pub fn grid_size(&self) -> u64 {
        let dims = self.a.max(self.b) as u64;
        self.params.as_ref().map_or(dims, |p| dims.max(p.largest()))
    }

    pub fn d(&self) -> Result<usize> {
        match self.d {
            Some(d) if d >= 1 => Ok(d),
            Some(_) => Err(Error::InvalidDegree("--d must be at least 1".into())),
            None => Err(Error::InvalidArgument("--d is required".into())),
        }
    }

    pub fn grid<F: Field>(&self, field: F) -> Result<GridConfig<F>> {
        match &self.params {
            Some(p) => GridConfig::from_ints(field, &p.u, &p.v),
            None => GridConfig::new(field, self.a, self.b, GridParams::Random(self.seed)),
        }
    }

    pub fn prime_field(&self) -> Option<PrimeField> {
        match self.field {
            FieldMode::Prime(p) => Some(PrimeField::new(p)),
            FieldMode::Rational => None,
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self.field {
            FieldMode::Prime(p) => Some(p.get()),
            FieldMode::Rational => None,
        }
    }
}

/// Runs `$body` with `$f` bound to the configured field.
#[macro_export]
macro_rules! with_field {
    ($mode:expr, |$f:ident| $body:expr) => {
        match $mode {
            $crate::config::FieldMode::Prime(p) => {
                let $f = $crate::field::PrimeField::new(p);
                $body
            }
            $crate::config::FieldMode::Rational => {
                let $f = $crate::field::RationalField;
                $body
            }
        }
    };
}

pub fn parse_prime(s: &str) -> Result<FieldMode> {
    let p: u64 = s.parse().map_err(|_| Error::InvalidArgument(format!("--prime {s:?} is not an integer")))?;
    Ok(FieldMode::Prime(PrimeModulus::new(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let p: ParamsOverride = "u=1,2,3;v=1,2,3,4".parse().unwrap();
        assert_eq!(p.u, vec![1, 2, 3]);
        assert_eq!(p.v, vec![1, 2, 3, 4]);
        assert_eq!(p.largest(), 4);
        assert!("u=1,2".parse::<ParamsOverride>().is_err());
        assert!("u=1,x;v=2".parse::<ParamsOverride>().is_err());
        assert!("w=1;v=2".parse::<ParamsOverride>().is_err());
    }

    #[test]
    fn defaults() {
        let c = RunConfig::default();
        assert_eq!(c.prime(), Some(2147483647));
        assert_eq!(c.trials, 3);
        assert_eq!(c.seed, RandomSeed(0xC0FFEE));
        assert_eq!(c.format, OutputFormat::Table);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn validation() {
        let small = RunConfig { field: parse_prime("101").unwrap(), ..RunConfig::default() };
        assert!(matches!(small.validate(), Err(Error::PrimeTooSmall { .. })));
        assert!(parse_prime("100").is_err());
        let wrong = RunConfig { params: Some("u=1,2;v=1,2,3".parse().unwrap()), ..RunConfig::default() };
        assert!(wrong.validate().is_err());
        let zero = RunConfig { trials: 0, ..RunConfig::default() };
        assert!(zero.validate().is_err());
        assert!(RunConfig::default().d().is_err());
        assert!(RunConfig { d: Some(0), ..RunConfig::default() }.d().is_err());
    }

    #[test]
    fn explicit_grid() {
        let c = RunConfig { a: 2, b: 3, params: Some("u=1,2;v=5,6,7".parse().unwrap()), ..RunConfig::default() };
        let g = c.grid(c.prime_field().unwrap()).unwrap();
        assert_eq!(g.u(), &[1, 2]);
        assert_eq!(g.v(), &[5, 6, 7]);
    }
}
