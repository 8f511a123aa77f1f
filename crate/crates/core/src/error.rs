use thiserror::Error;

/// Failure modes shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller supplied values outside an operation's domain.
    #[error("invalid input: {0}")]
    Input(String),
    /// An intermediate value left the signed 64-bit range.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    /// A configured size or enumeration budget was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// A construction that is supposed to be infallible produced an invalid
    /// result. The message carries the branch trace.
    #[error("internal consistency failure: {0}")]
    Logic(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
