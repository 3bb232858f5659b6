//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Error)]
pub enum Error {
    /// A graph6 line could not be decoded.
    #[error("invalid graph6: {0}")]
    InvalidGraph6(String),
    /// An edge-list input could not be parsed.
    #[error("invalid edge list: {0}")]
    InvalidEdgeList(String),
    /// An operation that needs a connected graph was given a disconnected one.
    #[error("graph is not connected")]
    Disconnected,
    /// A vertex index was out of range or an edge was a self-loop.
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    /// Family or operation parameters outside their validity range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Wrong number of input graphs for a graph operation.
    #[error("operation {op} expects {expected} input graph(s), got {got}")]
    WrongArity {
        op: &'static str,
        expected: usize,
        got: usize,
    },
    /// Unknown name given for a family, operation, or option list entry.
    #[error("unknown {kind}: {name}")]
    UnknownName { kind: &'static str, name: String },
    /// Requested output format not available for this command.
    #[error("unsupported output: {0}")]
    UnsupportedOutput(String),
    /// I/O failure while reading input or writing output.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
