use thiserror::Error;

/// Errors produced by arrangement construction and the verification engines.
///
/// `InvariantViolation` is special: it signals that two independent routes to
/// the same mathematical fact disagreed, i.e. an implementation bug, never a
/// legitimate "the condition is false" verdict.
#[derive(Debug, Error)]
pub enum ArrError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("rational function has a pole at the origin")]
    PoleAtOrigin,

    #[error("zero row at index {0}: hyperplane functionals must be nonzero")]
    ZeroRow(usize),

    #[error("rows {0} and {1} are proportional: hyperplanes must be distinct")]
    ProportionalRows(usize, usize),

    #[error("arrangement is not essential: row rank {rank} < ambient dimension {dim}")]
    NotEssential { rank: usize, dim: usize },

    #[error("restriction to the bottom flat is empty")]
    EmptyRestriction,

    #[error("base point lies on a hyperplane of the restricted arrangement (index {0})")]
    InvalidBasepoint(usize),

    #[error("no stable majority matroid among fibre samples (seed {seed})")]
    GenericityFailure { seed: u64 },

    #[error("generic arrangement construction failed after {retries} retries (seed {seed})")]
    GenericityRetriesExhausted { seed: u64, retries: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violation (implementation bug): {0}")]
    InvariantViolation(String),

    #[error("generator of degree {0} is not homogeneous")]
    NonHomogeneous(usize),

    #[error("invalid 3-tree spec: {0}")]
    InvalidSpec(String),

    #[error("unknown catalog name: {0}")]
    UnknownCatalog(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, ArrError>;
