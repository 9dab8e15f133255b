//! Spectral-radius ascent over cacti and unicyclic graphs.
//!
//! The crate computes Perron pairs of small graphs, applies neighbour
//! switches that strictly raise the spectral radius, drives cacti and
//! unicyclic graphs to the extremal graphs `H_n` and `K_{1,n-1}^+`, and
//! checks the extremal claims by exhaustive isomorph-free enumeration.

pub mod blocks;
pub mod canon;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod par;
pub mod random;
pub mod spectral;
pub mod transforms;

pub use blocks::{
    block_decomposition, cyclomatic_number, is_cactus, is_odd_cycle_graph, is_unicyclic,
    BlockDecomposition,
};
pub use canon::{canonical_graph, canonical_label, is_isomorphic, CanonicalForm, MAX_CANON_ORDER};
pub use error::{EnumerationError, GraphError, ParseError, SpectralError, TransformError};
pub use families::{
    cycle, h_n, is_edge_maximal_cactus, is_max_edge_cactus, k1n_plus, max_cactus_edges, path, star,
};
pub use graph::{make_graph, Graph};
pub use io::{parse_edge_list, write_edge_list};
pub use spectral::{
    compare_results, compare_rho, spectral_radius, PerronResult, RhoOrdering, DEFAULT_TOL,
};
