use thiserror::Error;

/// Errors surfaced by body construction, norm evaluation, and the
/// randomized constructions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("origin is not strictly interior to the body")]
    OriginNotInterior,

    #[error("body is unbounded")]
    Unbounded,

    #[error("zero vector has no normalization")]
    ZeroVector,

    #[error("product of zero bodies")]
    EmptyProduct,

    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(String),

    #[error("operation requires an o-symmetric body")]
    NotSymmetric,

    #[error("exact value unavailable: {0}")]
    ExactUnavailable(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown witness name: {0}")]
    UnknownWitness(String),

    #[error("rejection sampling acceptance rate below {0:e}")]
    AcceptanceTooLow(f64),

    #[error("retries exhausted after {0} attempts")]
    RetriesExhausted(usize),

    #[error("tolerance {tol:e} not reached within the iteration budget (best residual {best:e})")]
    ToleranceNotReached { tol: f64, best: f64 },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
