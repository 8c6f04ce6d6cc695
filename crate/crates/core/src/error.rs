use thiserror::Error;

/// Failures shared by all evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A documented precondition does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    /// The gamma function was evaluated at one of its poles.
    #[error("pole of the gamma function at s = {0}")]
    Pole(f64),

    /// A series hit its term cap before its tail bound met the tolerance.
    #[error("{what} did not converge within {max_terms} terms (tail bound {bound:e})")]
    NonConvergence {
        what: &'static str,
        max_terms: usize,
        bound: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
