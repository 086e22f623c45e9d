use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation (bad vertex, absent
    /// edge, loop, complement of a multigraph, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input size above a configured bound.
    #[error("capacity exceeded: {what} is limited to {limit}, got {got}")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    /// Malformed text input; `pos` is a byte offset (or line number for
    /// line-oriented formats, see the message).
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A multiset of polynomials that is not the polynomial deck of any graph.
    #[error("inconsistent deck: {0}")]
    InconsistentDeck(String),

    /// A named check of the counterexample lab failed.
    #[error("verification failed: {clause}: {detail}")]
    Verification { clause: String, detail: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
