use thiserror::Error;

/// Failure classes shared by every module of the kernel.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// The inputs violate a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A selection box contains roots that cannot be told apart.
    #[error("ambiguous selection: {0}")]
    Ambiguous(String),

    /// A proven identity or vanishing pattern failed to hold.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    /// The precision cap was reached before the requested accuracy.
    #[error("precision exhausted at {bits} bits: {detail}")]
    Precision { bits: u32, detail: String },

    /// A combinatorial expansion would exceed the configured cap.
    #[error("size cap exceeded: {terms} terms requested, cap is {cap}")]
    Size { terms: u128, cap: u128 },

    /// A symmetric set whose elementary symmetric functions are not all rational.
    #[error("closure error: coefficient of x^{index} is not rational")]
    Closure { index: usize },

    /// No prime in the sweep produced a positive certified bound.
    #[error("no certificate: {0}")]
    NoCertificate(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn consistency<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Consistency(msg.into()))
}
