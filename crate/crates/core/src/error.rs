use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid state word {0:?}: expected a non-empty string over {{0, 1}}")]
    InvalidWord(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid Catalan path: {0}")]
    InvalidPath(String),

    #[error("cannot substitute zero for {variable} in a term with exponent {exponent}")]
    Domain { variable: char, exponent: i64 },

    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("{what} = {value} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid rate {name} = {value}: must lie in (0, 1]")]
    InvalidRate { name: &'static str, value: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("linear system is singular")]
    Singular,

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
