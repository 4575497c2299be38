use thiserror::Error;

use crate::excess::ExcessReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("k = {k} outside the allowed range {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },

    #[error("C({n}, {k}) = {count} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, k: usize, count: u128, cap: u64 },

    #[error("graph on {0} vertices is too large for bitmask search (limit 64)")]
    TooManyVertices(usize),

    #[error("sets do not differ by exactly one element")]
    NotAdjacentSubsets,

    #[error("vertex set is not a cover: edge ({0}, {1}) is uncovered")]
    NotACover(usize, usize),

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("eigensolver did not converge after {0} iterations")]
    NoConvergence(usize),

    #[error("theorem bound `{name}` violated for {graph} at k = {k}: slack {slack:e}")]
    TheoremViolation {
        name: String,
        graph: String,
        k: usize,
        slack: f64,
        report: Box<ExcessReport>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
