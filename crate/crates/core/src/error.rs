use thiserror::Error;

/// Errors raised by the exact-arithmetic engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("ambient dimension {0} exceeds the supported maximum of 16")]
    DimensionTooLarge(usize),

    #[error("invalid index tuple {0:?}: {1}")]
    InvalidIndex(Vec<usize>, &'static str),

    #[error("zero form where a non-trivial form is required")]
    ZeroForm,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("Jacobi identity fails at ({i},{j},{k}), residual {residual}")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: String,
    },

    #[error("cocycle is not closed: d(omega) = {0}")]
    NotClosed(String),

    #[error("unknown catalog entry '{0}'")]
    UnknownAlgebra(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not in table normal form: {0}")]
    NotInNormalForm(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
