use thiserror::Error;

use crate::scalar::ScalarError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no exponent of zero")]
    NoExponentOfZero,
    #[error("homogenization of zero undefined")]
    HomogenizeZero,
    #[error("graded degree of zero undefined")]
    DegreeOfZero,
    #[error("symbol of zero undefined")]
    SymbolOfZero,
    #[error("semisyzygy of zero operator")]
    SemisyzygyOfZero,
    #[error("divisor {0} is zero")]
    ZeroDivisor(usize),
    #[error("zero ideal")]
    ZeroIdeal,
    #[error("invalid linear form: {0}")]
    InvalidLinearForm(String),
    #[error("invalid monomial ordering: {0}")]
    InvalidOrdering(String),
    #[error("dimension mismatch: expected n = {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree cap {cap} reached (pair of degree {degree})")]
    DegreeCapReached { cap: u64, degree: u64 },
    #[error("oracle matrix too large: {rows} x {cols} exceeds limit {limit}")]
    OracleTooLarge {
        rows: usize,
        cols: usize,
        limit: usize,
    },
    #[error("degree bound {bound} below generator degree {needed}")]
    OracleDegreeTooSmall { bound: u64, needed: u64 },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
