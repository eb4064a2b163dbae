use thiserror::Error;

/// Errors raised by the library.
///
/// Usage errors (mismatched ranks, malformed input) are separated from
/// mathematical failures so that callers such as the CLI can map them to
/// different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("cannot evaluate: coordinate {0} is zero")]
    ZeroCoordinate(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("configuration has zero weight: {0}")]
    ZeroWeight(String),

    #[error("identity failure: {0}")]
    IdentityFailure(String),

    #[error("model encoding error: {0}")]
    Encoding(String),

    /// Two random specializations disagreed; draw new points and retry.
    #[error("degenerate specialization: {0}")]
    Degenerate(String),
}

impl Error {
    /// True for errors caused by bad caller input rather than by a failed
    /// mathematical check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::VariableMismatch { .. }
                | Error::RankMismatch { .. }
                | Error::Parse(_)
                | Error::Invalid(_)
                | Error::ZeroCoordinate(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
