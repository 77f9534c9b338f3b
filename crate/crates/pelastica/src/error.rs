//! Crate-wide error type.

/// Errors produced by the library.
///
/// `Domain` and `Input` indicate a caller-side problem (bad parameter range or
/// malformed data); `Unsupported` marks operations that require a specific
/// ambient dimension; `Numerical` marks a solver or quadrature failure.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
