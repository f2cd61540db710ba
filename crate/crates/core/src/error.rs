use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {p} too small: need p > {bound} for grids of size {size}")]
    PrimeTooSmall { p: u64, bound: u64, size: u64 },

    #[error("modulus {0} does not fit in 32 bits")]
    ModulusTooLarge(u64),

    #[error("grading mismatch: {0}")]
    GradingMismatch(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("invalid degree: {0}")]
    InvalidDegree(String),

    #[error("duplicate grid parameter at position {0}")]
    DuplicateParameter(usize),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid locus: {0}")]
    InvalidLocus(String),

    #[error("projection center lies on the grid (point {0:?})")]
    CenterOnGrid((usize, usize)),

    #[error("invalid projection: {0}")]
    InvalidProjection(String),

    #[error("forms do not define a complete intersection: {0}")]
    DegenerateCi(String),

    #[error("graded piece has {cols} columns, above the cap of {cap}")]
    DimensionCap { cols: usize, cap: usize },

    #[error("zero linear form")]
    ZeroForm,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
