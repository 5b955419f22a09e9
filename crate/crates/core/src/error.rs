use thiserror::Error;

/// Errors raised by the workbench.
///
/// Failed identities are not errors: they are reported through the
/// various `*Report` types so that counterexamples can be inspected.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("argument is not in the expected set: {0}")]
    NotInSet(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("broken complex: d_out * d_in != 0 ({0})")]
    BrokenComplex(String),

    #[error("structure mismatch: {0}")]
    Mismatch(String),

    #[error("unsupported coefficients: {0}")]
    Coefficients(String),

    #[error("size guard exceeded: {0}")]
    Guard(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
