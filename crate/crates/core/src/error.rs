use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by frontends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    /// Malformed input or violated precondition.
    Input,
    /// A well-posed question whose answer is "no solution" (singular,
    /// infeasible, no intersection, ...).
    NoSolution,
    /// The computation itself broke down (iteration caps, poles, divergence).
    Numerical,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular (|det| = {det:e})")]
    Singular { det: f64 },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { pos: usize, name: String },

    #[error("matrix text line {line}: {msg}")]
    MatrixFormat { line: usize, msg: String },

    #[error("domain violation in `{0}`")]
    Domain(String),

    #[error("pole detected inside the integration interval near x = {at}")]
    Pole { at: f64 },

    #[error("divergent: {0}")]
    Divergent(String),

    #[error("iteration limit of {limit} exceeded")]
    IterationLimit { limit: usize },

    #[error("no solution: {0}")]
    NoSolution(String),
}

impl Error {
    pub fn category(&self) -> Category {
        match self {
            Error::Singular { .. } | Error::NoSolution(_) => Category::NoSolution,
            Error::Pole { .. } | Error::Divergent(_) | Error::IterationLimit { .. } => {
                Category::Numerical
            }
            _ => Category::Input,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
