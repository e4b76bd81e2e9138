use thiserror::Error;

/// Failures of the exact arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicands differ: {left} vs {right}")]
    RadicandMismatch { left: String, right: String },
    #[error("negative radicand {0} has no real square root")]
    NegativeRadicand(String),
}

/// A coefficient string that is neither a finite decimal nor a `p/q` fraction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {reason}")]
pub struct ParseError {
    /// Zero-based character offset of the first offending character.
    pub position: usize,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, reason: impl Into<String>) -> Self {
        Self {
            position,
            reason: reason.into(),
        }
    }
}
