use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the function's domain (e.g. `log_gamma(-1.0)`).
    #[error("domain error: {0}")]
    Domain(String),
    /// A parameter constraint required by an identity or bound is violated.
    #[error("constraint violated: {0}")]
    Constraint(String),
    /// Series did not meet its tolerance within the term budget.
    #[error("series failed to converge after {terms} terms (last relative term {last_ratio:e})")]
    Convergence { terms: usize, last_ratio: f64 },
    /// A gamma argument or denominator hit a pole.
    #[error("pole: {0}")]
    Pole(String),
    /// Continued fraction hit a vanishing intermediate denominator.
    #[error("instability: {0}")]
    Instability(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn constraint(msg: impl Into<String>) -> Self {
        Error::Constraint(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
}
