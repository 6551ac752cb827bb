use thiserror::Error;

/// Crate-wide error type. Variants map onto CLI exit codes: input-class
/// errors exit 2, resource errors exit 3.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("unsupported locus: {0}")]
    UnsupportedLocus(String),

    #[error("out of statement domain: {0}")]
    OutOfDomain(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code for the CLI: 2 for input-class errors, 3 for resource errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::UnsupportedLocus(_) | Error::OutOfDomain(_) => 2,
            Error::Resource(_) => 3,
            Error::Internal(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
