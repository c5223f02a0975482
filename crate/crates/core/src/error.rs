use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate interpolation nodes")]
    DegenerateNodes,
    #[error("empty interpolation data")]
    EmptyInterpolation,
    #[error("series is not a unit (constant term {0})")]
    NonUnit(String),
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstant(String),
    #[error("substituted series must have zero constant term")]
    NonzeroSubstitution,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("class must have zero constant term, found {0}")]
    NonzeroConstantTerm(String),
    #[error("uniqueness violation at r={r}, i={i}: non-integral entry {value}")]
    UniquenessViolation { r: usize, i: usize, value: String },
    #[error("fixed-point certificate mismatch for n={n}, k={k}")]
    CertificateMismatch { n: usize, k: usize },
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
    #[error("golden data: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, Error>;
