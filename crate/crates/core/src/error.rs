use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("unsupported characteristic {0}; operation requires characteristic 2")]
    UnsupportedCharacteristic(u8),

    #[error("invalid transvection: {0}")]
    InvalidTransvection(String),

    #[error("matrix is not a symplectic isometry")]
    InvalidIsometry,

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("operation requires {0}")]
    Capability(String),

    #[error("resource limit exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
