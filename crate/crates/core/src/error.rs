use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid family {kind}:{order}: {reason}")]
    InvalidFamily {
        kind: String,
        order: usize,
        reason: &'static str,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("enumeration supports 2..=7 vertices, got {0}")]
    EnumerationRange(usize),

    #[error("walk does not run from {expected_start} to {expected_end}")]
    WalkEndpoints { expected_start: usize, expected_end: usize },

    #[error("{what} limited to {limit} vertices, graph has {order}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        order: usize,
    },

    #[error("no set of size <= {max_size} found on {order} vertices; exact search stops there")]
    SearchExhausted { max_size: usize, order: usize },

    #[error("invalid graph spec {0:?}: expected g6:<line>, file:<path> or family:<kind>:<n>")]
    GraphSpec(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}
