use thiserror::Error;

/// Failure modes shared by every representation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("parameter pole: {0}")]
    ParameterPole(String),
    #[error("series not converged after {max_terms} terms")]
    MaxTerms { max_terms: usize },
    #[error("quadrature not converged: value {value:e}, error estimate {abs_err:e} after {evaluations} evaluations")]
    Quadrature {
        value: f64,
        abs_err: f64,
        evaluations: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
