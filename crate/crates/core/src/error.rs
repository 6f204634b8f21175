use crate::report::AxiomReport;

/// Errors returned by constructors, parsers and searches.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input has the wrong shape (non-square table, bad length, zero exponent, ...).
    #[error("malformed input: {0}")]
    Malformed(String),
    /// Input is well-formed but violates a precondition of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Tables are well-formed but fail the axioms.
    #[error("axiom violation: {0}")]
    Axioms(AxiomReport),
    /// A configured size cap would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
    /// Diagram text could not be parsed.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    /// True for errors caused by unreadable input, as opposed to valid input
    /// that is rejected on mathematical grounds.
    pub fn is_malformed(&self) -> bool {
        matches!(self, Error::Malformed(_) | Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn malformed<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Malformed(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
