use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex index {index} out of range for graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a walk: no {sign:?} edge between {u} and {v} at step {step}")]
    NotAWalk {
        u: usize,
        v: usize,
        sign: Option<crate::graph::Sign>,
        step: usize,
    },
    #[error("underlying multigraphs differ: {0}")]
    StructureMismatch(String),
    #[error("graph is not {0}-degenerate")]
    NotDegenerate(usize),
    #[error("point {point} lies outside [0, {r})")]
    OutOfRange { point: String, r: String },
    #[error("epsilon {0} outside the open interval (0, 2)")]
    EpsOutOfRange(String),
    #[error("coloring domain does not match the vertex set: {0}")]
    DomainMismatch(String),
    #[error("operation requires a simple graph: {0}")]
    NonSimpleInput(String),
    #[error("radius {0} outside the open interval (2, 4)")]
    BadRadius(String),
    #[error("input coloring is not a valid circular coloring: {0}")]
    InvalidInputColoring(String),
    #[error("edge {u}{v} is not a positive edge")]
    NotPositiveEdge { u: usize, v: usize },
    #[error("contraction at {u} produces a positive loop")]
    PositiveLoopInContraction { u: usize },
    #[error("lifted coloring failed re-verification: {0}")]
    LiftFailed(String),
    #[error("coloring does not verify on the given graph: {0}")]
    InvalidColoring(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
