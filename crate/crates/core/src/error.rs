use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid edge ({0}, {1}): loop or endpoint out of range")]
    InvalidEdge(VertexId, VertexId),
    #[error("vertex {0} out of range")]
    InvalidVertex(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("caterpillar spec needs at least one spine vertex")]
    EmptySpine,
    #[error("a spanning cycle needs at least 3 vertices, graph has {0}")]
    TooSmallForCycle(usize),
    #[error("no closed form covers leaf pattern {0:?}")]
    Unsupported(Vec<usize>),
    #[error("lambda = 0 is only possible for a Hamiltonian graph")]
    Inconsistent,
    #[error("minimum exceeds budget of {0} added edges")]
    BudgetExceeded(usize),
    #[error("constructed plan failed validation: {0}")]
    InvalidPlan(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsatisfiable generator constraint: {0}")]
    Unsatisfiable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
