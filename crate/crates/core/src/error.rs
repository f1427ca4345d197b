use thiserror::Error;

use crate::theorems::TheoremId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceeds the 64-vertex limit")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("{0}{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("{what} supports at most {limit} vertices, got {n}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        n: usize,
    },
    #[error("twin edge sets have {0} pairs, above the enumeration cap of 20")]
    TwinCapExceeded(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed header: {0}")]
    Header(String),
    #[error("byte {byte} at position {position} is outside 63..=126")]
    OutOfRange { position: usize, byte: u8 },
    #[error("expected {expected} payload bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits in the last payload byte")]
    TrailingBits,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix order {0} exceeds 64")]
    TooLarge(usize),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("graph has no edges")]
    Edgeless,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CheckError {
    #[error("{theorem} does not apply: {reason}")]
    NotApplicable { theorem: TheoremId, reason: String },
    #[error(
        "{theorem}: structural equality ({structural}) disagrees with numeric value {value} vs bound {bound}"
    )]
    ToleranceConflict {
        theorem: TheoremId,
        structural: bool,
        value: f64,
        bound: f64,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}
