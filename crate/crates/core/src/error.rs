use crate::tgraph::{Time, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("traversal time must be at least 1, got {0}")]
    ZeroTraversal(Time),

    #[error("times must be non-negative, got {0}")]
    NegativeTime(Time),

    #[error("empty time window [{t_alpha}, {t_omega}]")]
    InvalidWindow { t_alpha: Time, t_omega: Time },

    #[error("invalid beer configuration: {0}")]
    InvalidBeer(String),

    #[error("vertex {0} is not a beer vertex")]
    NotBeerVertex(VertexId),

    #[error("the adjacency-list variant needs a graph without dominated edges")]
    DominatedEdges,

    #[error("activation mask has {found} entries, expected {expected}")]
    ActivationLength { expected: usize, found: usize },

    #[error("malformed index file: {0}")]
    Index(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
