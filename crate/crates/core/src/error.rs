use std::path::PathBuf;

/// Errors raised by the filters, generators and the experiment runner.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("covariance is singular or ill-conditioned (condition number {condition:e})")]
    Singular { condition: f64 },

    #[error("covariance has zero trace; cannot project a point mass")]
    ZeroTrace,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("{path}:{line}: {message}")]
    Csv { path: PathBuf, line: usize, message: String },

    #[error("unknown algorithm `{name}`; registered algorithms: {known}")]
    UnknownAlgorithm { name: String, known: String },

    #[error("config: {0}")]
    Config(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParam { name, reason: reason.into() }
    }

    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { context: context.into(), source }
    }

    /// True for errors caused by how the program was invoked rather than by data.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::UnknownAlgorithm { .. } | Error::Config(_) | Error::InvalidParam { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
