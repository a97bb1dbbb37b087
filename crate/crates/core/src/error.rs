use std::path::PathBuf;

use crate::graph::VertexId;

/// Errors raised by graph construction, I/O and the algorithms built on top.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0}-{1} has non-positive weight")]
    NonPositiveWeight(VertexId, VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for graph with n={n}")]
    InvalidVertex { vertex: VertexId, n: usize },
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(VertexId, VertexId),
    #[error("{0}-{1} is a cut-edge")]
    CutEdge(VertexId, VertexId),
    #[error("graph is not a subgraph of its claimed parent")]
    NotSubgraph,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("brute-force guard exceeded: {what} is {actual}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("protocol violated locality: {0}")]
    Locality(String),
    #[error("protocol exceeded its round budget of {budget}")]
    RoundBudget {
        budget: usize,
        partial: Box<crate::sim::RoundTrace>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
