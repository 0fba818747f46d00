use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),

    #[error("input must avoid the pattern {pattern}")]
    NotAvoiding { pattern: &'static str },

    #[error("square set is not the diagram of a permutation of length {n}: {reason}")]
    NotRealizable { n: usize, reason: String },

    #[error("inconsistent partial data: {0}")]
    Inconsistent(String),

    #[error("{what} limited to n <= {max}, got n = {n}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("tunnel {0} is not admissible here")]
    InvalidTunnel(String),

    #[error("position pair ({0}, {1}) is not admissible here")]
    InvalidPair(usize, usize),

    #[error("m must be at least 2, got {0}")]
    InvalidM(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
