use super::{Ascent, StepKind, TransformStep};
use crate::blocks::is_unicyclic;
use crate::error::TransformError;
use crate::families::is_max_edge_cactus;
use crate::graph::Graph;
use crate::spectral::spectral_radius;

/// Moves the neighbours `moved` of `v` over to `u`: deletes each `v–s` and
/// adds `u–s`.
///
/// Requires `u ≠ v`, `moved` non-empty, and every `s` in `moved` adjacent to
/// `v` but neither equal nor adjacent to `u`. When `G` is connected and the
/// Perron entries satisfy `x_u ≥ x_v`, the result has strictly larger
/// spectral radius; that claim is checked by [`certified_switch`], not here.
pub fn sigma_switch(
    g: &Graph,
    u: usize,
    v: usize,
    moved: &[usize],
) -> Result<Graph, TransformError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(TransformError::pre("switch endpoints coincide"));
    }
    if moved.is_empty() {
        return Err(TransformError::pre("switch moves no neighbours"));
    }
    let mut sorted = moved.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(TransformError::pre("switch set has repeated vertices"));
    }
    for &s in &sorted {
        if s == u {
            return Err(TransformError::pre(format!("switch set contains u = {u}")));
        }
        if !g.has_edge(v, s) {
            return Err(TransformError::pre(format!(
                "{s} is not a neighbour of v = {v}"
            )));
        }
        if g.has_edge(u, s) {
            return Err(TransformError::pre(format!(
                "{s} is already a neighbour of u = {u}"
            )));
        }
    }
    let edges = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                return (a, b);
            };
            if sorted.binary_search(&other).is_ok() {
                (u, other)
            } else {
                (a, b)
            }
        })
        .collect::<Vec<_>>();
    Ok(Graph::new(g.order(), edges)?)
}

/// Switch with the ρ-increase claim enforced: `g` must be connected, the
/// Perron entries must satisfy `x_u ≥ x_v` (within the orientation guard),
/// and the new spectral radius must exceed the old beyond error bounds.
pub fn certified_switch(
    g: &Graph,
    u: usize,
    v: usize,
    moved: &[usize],
    tol: f64,
) -> Result<(TransformStep, Graph), TransformError> {
    if !g.is_connected() {
        return Err(TransformError::pre(
            "switch guarantee needs a connected graph",
        ));
    }
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let perron = spectral_radius(g, tol)?;
    if perron.vector[u] < perron.vector[v] - super::ORIENTATION_GUARD {
        return Err(TransformError::pre(format!(
            "Perron entry of u = {u} ({}) is below that of v = {v} ({})",
            perron.vector[u], perron.vector[v]
        )));
    }
    let mut ascent = Ascent::new(g, tol)?;
    ascent.switch(StepKind::Switch, u, v, moved.to_vec())?;
    let mut trace = ascent.finish();
    let step = trace.steps.pop().expect("one step recorded");
    Ok((step, trace.final_graph))
}

/// Rewires every neighbour of `v` outside `N(u) ∪ {u}` to `u`. On a
/// connected max-edge cactus with adjacent `u`, `v` of degree at least 3 the
/// result is again a max-edge cactus with one fewer vertex of degree ≥ 3.
/// The caller orients the pair so that `x_u ≥ x_v`.
pub fn merge_high_degree(g: &Graph, u: usize, v: usize) -> Result<Graph, TransformError> {
    if !is_max_edge_cactus(g) {
        return Err(TransformError::pre(
            "merge needs a connected max-edge cactus",
        ));
    }
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(TransformError::pre(format!("{u} and {v} are not adjacent")));
    }
    if g.degree(u)? < 3 || g.degree(v)? < 3 {
        return Err(TransformError::pre(format!(
            "merge needs both {u} and {v} of degree at least 3"
        )));
    }
    let moved = g.private_neighbors(v, u)?;
    sigma_switch(g, u, v, &moved)
}

/// First edge `(u, v)` (lexicographic) whose endpoints both have a private
/// neighbour, i.e. `N(u) \ (N(v) ∪ {v})` and `N(v) \ (N(u) ∪ {u})` are both
/// non-empty. `None` exactly for `K_{1,n-1}^+`.
pub fn find_switchable_pair(g: &Graph) -> Result<Option<(usize, usize)>, TransformError> {
    if !is_unicyclic(g) {
        return Err(TransformError::pre(
            "switchable pair search needs a unicyclic graph",
        ));
    }
    for &(u, v) in g.edges() {
        if !g.private_neighbors(u, v)?.is_empty() && !g.private_neighbors(v, u)?.is_empty() {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

#[cfg(test)]
/// Picks the orientation of a merge pair from the Perron vector of `g`.
pub(crate) fn oriented_pair(
    g: &Graph,
    a: usize,
    b: usize,
    tol: f64,
) -> Result<(usize, usize), TransformError> {
    let perron = spectral_radius(g, tol)?;
    Ok(super::orient(&perron, a, b))
}
