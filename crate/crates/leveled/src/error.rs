use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: self-loop {v} {v} is not allowed in a simple graph")]
    SelfLoop { line: usize, v: usize },
    #[error("vertex {vertex} out of range (graph has {bound} vertices)")]
    VertexOutOfRange { vertex: usize, bound: usize },
    #[error("unknown or invalid graph family: {0}")]
    InvalidFamily(String),
    #[error("sequence is not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("graph must be connected for this operation")]
    Disconnected,
    #[error("{what} exceeds the exact-computation bound: {actual} > {limit}")]
    SizeGate {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("levels do not form a proper coloring of the conflict graph")]
    ImproperColoring,
    #[error("invalid crossing relation: {0}")]
    InvalidRelation(String),
    #[error("invalid witness sequence: {0}")]
    InvalidWitness(String),
    #[error("certificate verification failed: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
