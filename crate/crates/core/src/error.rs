use thiserror::Error;

use crate::ring::RingDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch {
        left: RingDescriptor,
        right: RingDescriptor,
    },

    /// A mathematical precondition failed (divisibility, parity, invalid
    /// group parameter). The CLI maps these to exit code 2.
    #[error("{0}")]
    Precondition(String),

    /// Malformed textual input, with the byte offset of the first bad token.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
