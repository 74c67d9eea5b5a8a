use thiserror::Error;

/// Construction and lookup failures for ordered graphs and instances.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid vertex id {0:?}")]
    BadVertexId(String),
    #[error("invalid position {0:?}")]
    BadPosition(String),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("vertices {0} and {1} share a position")]
    DuplicatePosition(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(String, String),
    #[error("list assignment covers {got} vertices, graph has {expected}")]
    ListLength { expected: usize, got: usize },
    #[error("invalid color list {0:?}")]
    BadList(String),
    #[error("sequence of length {got} is shorter than the required {needed}")]
    SequenceTooShort { needed: usize, got: usize },
    #[error("sequence entries must be distinct")]
    RepeatedEntry,
}
