use thiserror::Error;

/// Errors produced by parsers, generators, solvers and bound evaluators.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual graph input (edge list or graph6).
    #[error("parse error: {0}")]
    Parse(String),

    /// The instance does not fit the 64-vertex bitset representation.
    #[error("graph too large: n={n} exceeds the representation limit of {max} vertices")]
    TooLarge { n: usize, max: usize },

    /// Invalid pattern specification.
    #[error("invalid pattern: {0}")]
    Pattern(String),

    /// Invalid parameters for a graph family generator.
    #[error("invalid family parameters: {0}")]
    Family(String),

    /// The instance exceeds the configured cap for an exact search.
    #[error("instance over cap: n={n} exceeds the {what} cap of {cap}")]
    OverCap {
        n: usize,
        cap: usize,
        what: &'static str,
    },

    /// An internal contract was violated, e.g. a bound evaluator was handed
    /// a set that is not maximal even though it was certified optimal.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
