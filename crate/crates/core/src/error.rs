use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown basis `{0}` (expected one of s, h, e, m, p)")]
    UnknownBasis(String),

    #[error("partition {0:?} is not in canonical (non-increasing, positive) form")]
    NonCanonicalPartition(Vec<usize>),

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("coboundary of a {0}-cochain is not supported (arity must be 1 or 2)")]
    UnsupportedArity(usize),

    #[error("weight {weight} exceeds the cap {cap}")]
    BeyondCap { weight: usize, cap: usize },

    #[error("cochain is not normalized: value on the unit is {0}")]
    NotNormalized(String),

    #[error("{0}")]
    Domain(String),
}
