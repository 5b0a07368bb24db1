use thiserror::Error;

/// Errors raised by the threshold-graph library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A creation sequence contained something other than `0` or `1`.
    #[error("invalid creation sequence: character {found:?} at position {position} is not 0 or 1")]
    Parse { position: usize, found: char },

    #[error("invalid creation sequence: bit {position} has value {value}, expected 0 or 1")]
    NotABit { position: usize, value: u8 },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("no edge query for a vertex with itself (vertex {0})")]
    SelfPair(usize),

    /// A dense oracle was asked for a matrix larger than its cap.
    #[error("dimension {n} exceeds dense oracle cap {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    /// Off-diagonal and diagonal lengths of a weighted threshold matrix disagree.
    #[error("weighted threshold matrix needs {expected} off-diagonal values for {diag} diagonal values, got {got}")]
    LengthMismatch {
        expected: usize,
        diag: usize,
        got: usize,
    },

    #[error("a matrix must have at least one row")]
    EmptyMatrix,

    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("invalid polynomial text {text:?}: {reason}")]
    PolynomialSyntax { text: String, reason: String },

    /// An exact reconstruction produced a non-integral value.
    #[error("non-integral value in exact reconstruction: {0}")]
    NonIntegral(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
