use alloc::string::String;

/// Errors raised by the library.
///
/// Decision outcomes that are legitimately negative (a module that is not
/// free, an algebra that is not Frobenius) are returned as values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed textual input (scalars, presentations).
    #[error("parse error: {0}")]
    Parse(String),
    /// Structurally invalid input: wrong sizes, failed preconditions.
    #[error("input error: {0}")]
    Input(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    /// A subspace offered as a coideal violates `ε(I) = 0` or
    /// `Δ(I) ⊆ I⊗C + C⊗I`.
    #[error("not a coideal: {0}")]
    NotCoideal(String),
    /// A hypothesis of a theorem driver does not hold on the given inputs.
    #[error("hypothesis failure at {stage}: {reason}")]
    HypothesisFailure { stage: String, reason: String },
    /// The algorithm cannot decide with the methods available.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    /// The requested computation is deliberately not supported.
    #[error("refused: {0}")]
    Refused(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub fn hypothesis(stage: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::HypothesisFailure { stage: stage.into(), reason: reason.into() }
    }
}
