use thiserror::Error;

/// Every failure the library can report. Mathematical verdicts (an axiom
/// failing, an idempotent that is not idempotent) are data, not errors;
/// these variants cover malformed input and violated preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("unsupported coefficient domain: {0}")]
    UnsupportedDomain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear system has no solution")]
    NoSolution,

    #[error("invalid input: {0}")]
    Input(String),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("not a Hopf algebra: {0}")]
    NotHopf(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("rewriting did not terminate on {word} within {steps} steps")]
    Divergence { word: String, steps: usize },

    #[error("closure error: {0}")]
    Closure(String),

    #[error("confluence error: {0}")]
    Confluence(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
