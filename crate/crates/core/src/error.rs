use thiserror::Error;

/// Errors raised by the arithmetic kernel and the verification drivers.
///
/// A failing identity is never an error: it is recorded as a counterexample
/// in a [`crate::report::VerificationReport`]. Errors are reserved for calls
/// outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Structural precondition violated (ordering of bounds, parity, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Text that is not a canonical polynomial rendering.
    #[error("parse error: {0}")]
    Parse(String),
    /// An internal consistency assertion between two computation routes failed.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
