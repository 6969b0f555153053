use thiserror::Error;

/// Failure kinds shared by every module.
///
/// The variants map one-to-one onto the exit codes of the command-line tool,
/// so new failure modes should pick the closest existing kind.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("capacity exceeded: {what} has size {size}, limit is {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
