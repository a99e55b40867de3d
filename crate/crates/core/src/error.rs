use thiserror::Error;

/// Failure classes shared by every operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The arguments violate an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),
    /// The instance is valid but exceeds what an exhaustive method supports.
    #[error("capability exceeded: {0}")]
    Capability(String),
    /// A node program broke the message contract of the simulator.
    #[error("protocol violation: {0}")]
    Protocol(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub fn is_capability(&self) -> bool {
        matches!(self, Error::Capability(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
