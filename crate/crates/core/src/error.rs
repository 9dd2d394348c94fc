//! Shared error type for parsing and precondition failures.

use thiserror::Error;

/// Errors reported by parsers, validators and precondition checks.
///
/// Operations that merely *evaluate* something (an inequality, an ordering
/// test) return reports rather than errors; `Error` is reserved for inputs
/// that are malformed or outside an operation's domain.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Input text could not be parsed. `line` is 1-based.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Sequences that must have equal length did not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A weight vector contained a negative entry.
    #[error("negative weight at index {index}")]
    NegativeWeight { index: usize },

    /// A zero entry cannot be raised to a negative exponent.
    #[error("zero entry at index {index} cannot be raised to exponent {exponent}")]
    ZeroWithNegativeExponent { index: usize, exponent: i32 },

    /// The operation needs at least one edge.
    #[error("graph has no edges")]
    EdgelessGraph,

    /// The matrix does not have matching row and column sum vectors.
    #[error("matrix is not sum-symmetric")]
    NotSumSymmetric,

    /// The digraph does not have in-degree equal to out-degree everywhere.
    #[error("digraph is not degree-balanced")]
    NotDegreeBalanced,

    /// A search range exceeded the configured size cap.
    #[error("size cap exceeded: {msg}")]
    CapExceeded { msg: String },

    /// A loop edge appeared where loops are not allowed.
    #[error("loop edge at vertex {vertex} is not allowed in an undirected graph")]
    LoopEdge { vertex: usize },

    /// An endpoint referred to a vertex outside `0..n`.
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// A search specification combined incompatible options.
    #[error("invalid search specification: {msg}")]
    InvalidSearchSpec { msg: String },

    /// The operation is only defined for the other kind of graph.
    #[error("{msg}")]
    WrongGraphKind { msg: String },
}

impl Error {
    /// Convenience constructor for parse errors.
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
