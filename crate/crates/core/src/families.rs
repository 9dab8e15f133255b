//! Named graph families and the extremal-cactus edge counts.

use crate::blocks::is_cactus;
use crate::error::GraphError;
use crate::graph::Graph;

fn need(n: usize, min: usize) -> Result<(), GraphError> {
    if n < min {
        Err(GraphError::OrderTooSmall { n, min })
    } else {
        Ok(())
    }
}

/// `K_{1,n-1}` centred at vertex 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    need(n, 2)?;
    Ok(Graph::from_canonical(n, (1..n).map(|v| (0, v)).collect()))
}

/// The extremal cactus: a star centred at 0 with consecutive leaves paired
/// by `(1,2), (3,4), …`. For even `n` leaf `n-1` stays pendant.
pub fn h_n(n: usize) -> Result<Graph, GraphError> {
    need(n, 3)?;
    let pairs = (n - 1) / 2;
    let edges = (1..n)
        .map(|v| (0, v))
        .chain((0..pairs).map(|k| (2 * k + 1, 2 * k + 2)));
    Graph::new(n, edges)
}

/// The extremal unicyclic graph: a star centred at 0 plus the edge `(1,2)`.
pub fn k1n_plus(n: usize) -> Result<Graph, GraphError> {
    need(n, 3)?;
    Graph::new(n, (1..n).map(|v| (0, v)).chain([(1, 2)]))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    need(n, 3)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    need(n, 1)?;
    Ok(Graph::from_canonical(
        n,
        (1..n).map(|v| (v - 1, v)).collect(),
    ))
}

/// Largest edge count of a connected cactus on `n` vertices.
pub fn max_cactus_edges(n: usize) -> usize {
    match n {
        0 => 0,
        1 | 2 => n - 1,
        _ => n - 1 + (n - 1) / 2,
    }
}

/// Connected cactus attaining [`max_cactus_edges`].
pub fn is_max_edge_cactus(g: &Graph) -> bool {
    g.order() > 0 && g.size() == max_cactus_edges(g.order()) && g.is_connected() && is_cactus(g)
}

/// Non-edges whose addition keeps `g` a cactus, in lexicographic order.
pub fn cactus_addable_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.non_edges()
        .filter(|&(u, v)| is_cactus(&g.with_edge(u, v).expect("non-edge")))
        .collect()
}

/// Connected cactus to which no edge can be added without breaking the
/// cactus property. Implied by, but weaker than, [`is_max_edge_cactus`].
pub fn is_edge_maximal_cactus(g: &Graph) -> bool {
    g.is_connected() && is_cactus(g) && cactus_addable_edges(g).is_empty()
}
