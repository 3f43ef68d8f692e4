use thiserror::Error;

use crate::monomial::ComponentVar;

/// A text input that does not match the expected grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {expected} in {input:?}")]
pub struct ParseError {
    /// Byte offset into `input`.
    pub position: usize,
    pub expected: String,
    pub input: String,
}

impl ParseError {
    pub fn new(position: usize, expected: impl Into<String>, input: &str) -> Self {
        ParseError { position, expected: expected.into(), input: input.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("no value assigned to {0}")]
    MissingAssignment(ComponentVar),

    #[error("extent mismatch: {left:?} vs {right:?}")]
    ExtentMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("dimension mismatch: expected {expected}D grid, got {found}D")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidSpec(String),

    #[error("empty factor list")]
    EmptyFactors,

    #[error("multinomial expansion needs {required} terms, limit is {limit}")]
    ExpansionLimit { required: String, limit: u64 },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("requested depth {requested} exceeds the {available} computed components")]
    DepthExceeded { requested: usize, available: usize },

    #[error("computation exceeded its time budget")]
    Timeout,

    #[error("unknown algorithm {name:?}; valid names: {valid}")]
    UnknownAlgorithm { name: String, valid: String },

    #[error("algorithms disagree on power {power}, order {order}:\n{diff}")]
    Disagreement { power: u32, order: usize, diff: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
