use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// The working precision is too low for a trustworthy result.
    #[error("insufficient precision: {0}")]
    Precision(String),

    /// A requested size exceeds the configured cap.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("precision of {digits} digits is below the minimum of {min}")]
    InvalidPrecision { digits: u32, min: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid partition table: {0}")]
    InvalidTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
