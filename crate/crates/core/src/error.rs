use thiserror::Error;

/// Errors raised by the library. The CLI maps the first group to exit code 2
/// and the failure group (see [`Error::is_failure`]) to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("zero coefficient at index {index}")]
    ZeroCoefficient { index: usize },
    #[error("interval endpoint {0} is a root; shift the endpoint")]
    EndpointRoot(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error("certification failed: {0}")]
    CertificationFailure(String),
    #[error("descent failed: {0}")]
    DescentFailure(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for construction, certification and descent failures, i.e. the
    /// errors that indicate a broken invariant rather than bad input.
    pub fn is_failure(&self) -> bool {
        matches!(
            self,
            Error::ConstructionFailure(_) | Error::CertificationFailure(_) | Error::DescentFailure(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
