use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

/// Errors reported by graph construction, the enumerators and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("operation requires an undirected graph")]
    RequiresUndirected,
    #[error("operation requires a directed graph")]
    RequiresDirected,
    #[error("edge set contains a cycle")]
    Cycle,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid terminals: {0}")]
    InvalidTerminals(String),
    #[error("infeasible instance: {0}")]
    Infeasible(String),
    #[error("graph is not claw-free (claw centred at vertex {0})")]
    NotClawFree(VertexId),
    #[error("integrity violation: {0}")]
    Integrity(String),
    #[error("brute-force search space of 2^{bits} exceeds the cap of 2^{cap_bits}")]
    OracleCap { bits: usize, cap_bits: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
