use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {v} outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge ({u}, {v}) is not present")]
    MissingEdge { u: usize, v: usize },
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("construction needs order at least {min}, got {n}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("order {n} exceeds the supported limit of {max}")]
    UnsupportedOrder { n: usize, max: usize },
}

/// Edge-list text format errors. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("graph has no vertices")]
    NullGraph,
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error(
        "power iteration did not converge after {iterations} steps \
         (best rho {rho}, residual {residual:e})"
    )]
    NonConvergence {
        rho: f64,
        residual: f64,
        iterations: usize,
    },
}

#[derive(Debug, Clone, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A rewrite whose spectral-radius increase could not be confirmed
    /// beyond the combined error bounds.
    #[error(
        "no certified increase for {kind} at ({u}, {v}): rho {rho_before} -> {rho_after} on {graph}"
    )]
    NoIncrease {
        kind: String,
        u: usize,
        v: usize,
        rho_before: f64,
        rho_after: f64,
        /// Offending input graph, serialized as JSON.
        graph: String,
    },
}

#[derive(Debug, Clone, Error)]
pub enum EnumerationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("order {n} outside the supported range {min}..={max}")]
    UnsupportedOrder { n: usize, min: usize, max: usize },
    #[error("{claim} fails at n = {n}: counterexample {}", serde_json::to_string(.graph).unwrap_or_default())]
    Counterexample {
        claim: String,
        n: usize,
        graph: Box<Graph>,
    },
}

impl TransformError {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        TransformError::Precondition(msg.into())
    }
}
