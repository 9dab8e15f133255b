//! Driving a connected cactus to a cactus with the maximum number of edges
//! without ever lowering its spectral radius.
//!
//! Stages, applied in order and repeated until a full pass changes nothing:
//!
//! 1. shrink every cycle of length ≥ 4 down to triangles by single switches;
//! 2. close two consecutive bridges `uv`, `vw` into the triangle `uvw`;
//! 3. turn each bridge between two non-pendant endpoints into a pendant edge;
//! 4. pair up pendant edges at a common support and close each pair.
//!
//! Selection is always the lexicographically least candidate, so traces are
//! reproducible.

use super::{Ascent, StepKind, TransformTrace};
use crate::blocks::{block_decomposition, is_cactus, BlockDecomposition};
use crate::error::TransformError;
use crate::families::{cactus_addable_edges, is_max_edge_cactus};
use crate::graph::Graph;

fn require_connected_cactus(g: &Graph) -> Result<BlockDecomposition, TransformError> {
    if !g.is_connected() {
        return Err(TransformError::pre("graph is not connected"));
    }
    let bd = block_decomposition(g);
    if !is_cactus(g) {
        return Err(TransformError::pre("graph is not a cactus"));
    }
    Ok(bd)
}

fn require_triangles(bd: &BlockDecomposition) -> Result<(), TransformError> {
    if bd.blocks.iter().any(|b| b.len() > 3) {
        return Err(TransformError::pre(
            "graph has a cycle longer than a triangle",
        ));
    }
    Ok(())
}

/// Bridge neighbours of each vertex, sorted.
fn bridge_neighbors(g: &Graph, bd: &BlockDecomposition) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); g.order()];
    for (a, b) in bd.bridges() {
        out[a].push(b);
        out[b].push(a);
    }
    for list in &mut out {
        list.sort_unstable();
    }
    out
}

fn has_consecutive_bridges(g: &Graph, bd: &BlockDecomposition) -> bool {
    bridge_neighbors(g, bd).iter().any(|b| b.len() >= 2)
}

/// Pendant edges as `(support, leaf)`, sorted.
fn pendants(g: &Graph, bd: &BlockDecomposition) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = bd
        .bridges()
        .filter_map(|(a, b)| {
            if g.nbrs(b).len() == 1 && g.nbrs(a).len() > 1 {
                Some((a, b))
            } else if g.nbrs(a).len() == 1 && g.nbrs(b).len() > 1 {
                Some((b, a))
            } else {
                None
            }
        })
        .collect();
    out.sort_unstable();
    out
}

fn edge_maximal_step(run: &mut Ascent) -> Result<bool, TransformError> {
    match cactus_addable_edges(run.graph()).first() {
        Some(&(a, b)) => run.add_edge(a, b).map(|_| true),
        None => Ok(false),
    }
}

/// One application of the cycle-shrinking switch; `false` when every cycle
/// is already a triangle.
pub(super) fn shrink_step(run: &mut Ascent) -> Result<bool, TransformError> {
    let bd = require_connected_cactus(run.graph())?;
    let Some(block) = bd.blocks.iter().find(|b| b.len() >= 4) else {
        return Ok(false);
    };
    let (a, b) = block[0];
    let (u, v) = run.orient(a, b);
    let y = block
        .iter()
        .find_map(|&(p, q)| match (p == v, q == v) {
            (true, _) if q != u => Some(q),
            (_, true) if p != u => Some(p),
            _ => None,
        })
        .expect("cycle vertex has two cycle neighbours");
    run.switch(StepKind::Switch, u, v, vec![y])?;
    Ok(true)
}

fn bridge_triangle_step(run: &mut Ascent) -> Result<bool, TransformError> {
    let g = run.graph();
    let bd = require_connected_cactus(g)?;
    require_triangles(&bd)?;
    let found = bridge_neighbors(g, &bd)
        .iter()
        .find(|b| b.len() >= 2)
        .map(|b| (b[0], b[1]));
    match found {
        Some((u, w)) => run.add_edge(u, w).map(|_| true),
        None => Ok(false),
    }
}

fn triangle_bridge_step(run: &mut Ascent) -> Result<bool, TransformError> {
    let g = run.graph();
    let bd = require_connected_cactus(g)?;
    require_triangles(&bd)?;
    if has_consecutive_bridges(g, &bd) {
        return Err(TransformError::pre("graph has two consecutive bridges"));
    }
    let mut bridges: Vec<(usize, usize)> = bd.bridges().collect();
    bridges.sort_unstable();
    let Some(&(a, b)) = bridges
        .iter()
        .find(|&&(a, b)| g.nbrs(a).len() >= 2 && g.nbrs(b).len() >= 2)
    else {
        return Ok(false);
    };
    let (u, v) = run.orient(a, b);
    let moved = run.graph().private_neighbors(v, u)?;
    run.switch(StepKind::Switch, u, v, moved)?;
    Ok(true)
}

fn pendant_step(run: &mut Ascent) -> Result<bool, TransformError> {
    let g = run.graph();
    let bd = require_connected_cactus(g)?;
    require_triangles(&bd)?;
    let pend = pendants(g, &bd);
    if bd.bridges().count() != pend.len() {
        return Err(TransformError::pre(
            "graph has a bridge that is not a pendant edge",
        ));
    }
    if let Some(w) = pend.windows(2).find(|w| w[0].0 == w[1].0) {
        let (l1, l2) = (w[0].1, w[1].1);
        run.add_edge(l1, l2)?;
        return Ok(true);
    }
    if pend.len() >= 2 {
        let ((s1, l1), (s2, l2)) = (pend[0], pend[1]);
        let (u, v) = run.orient(s1, s2);
        let leaf = if v == s1 { l1 } else { l2 };
        run.switch(StepKind::Switch, u, v, vec![leaf])?;
        return Ok(true);
    }
    Ok(false)
}

pub(super) fn exhaust(
    run: &mut Ascent,
    step: fn(&mut Ascent) -> Result<bool, TransformError>,
) -> Result<bool, TransformError> {
    let mut any = false;
    while step(run)? {
        any = true;
    }
    Ok(any)
}

/// Adds cactus-preserving edges (least first) until none is left. Each
/// addition raises ρ because the graph is connected.
pub fn make_edge_maximal(g: &Graph, tol: f64) -> Result<TransformTrace, TransformError> {
    require_connected_cactus(g)?;
    let mut run = Ascent::new(g, tol)?;
    exhaust(&mut run, edge_maximal_step)?;
    Ok(run.finish())
}

/// Shrinks the least cycle of length ≥ 4 by one vertex: for adjacent cycle
/// vertices `u`, `v` with `x_u ≥ x_v`, the other cycle neighbour `y` of `v`
/// is switched to `u`, leaving `uv` as a bridge. `None` when all cycles are
/// triangles.
pub fn shrink_cycle_once(g: &Graph, tol: f64) -> Result<Option<Graph>, TransformError> {
    let mut run = Ascent::new(g, tol)?;
    Ok(shrink_step(&mut run)?.then(|| run.finish().final_graph))
}

/// Closes consecutive bridges `uv`, `vw` into triangles until no two
/// bridges share a vertex. Needs a connected cactus whose cycles are
/// triangles.
pub fn add_consecutive_bridge_edges(g: &Graph, tol: f64) -> Result<Graph, TransformError> {
    let mut run = Ascent::new(g, tol)?;
    exhaust(&mut run, bridge_triangle_step)?;
    Ok(run.finish().final_graph)
}

/// Turns the least bridge whose endpoints both have degree ≥ 2 into a
/// pendant edge by switching all other neighbours of the lower-Perron
/// endpoint across. `None` when every bridge is already pendant.
pub fn eliminate_triangle_bridge(g: &Graph, tol: f64) -> Result<Option<Graph>, TransformError> {
    let mut run = Ascent::new(g, tol)?;
    Ok(triangle_bridge_step(&mut run)?.then(|| run.finish().final_graph))
}

/// Pairs pendant edges: leaves sharing a support are joined into a
/// triangle; otherwise the leaf at the lower-Perron support of the two least
/// pendant edges moves to the other support. Ends with at most one pendant
/// edge.
pub fn consolidate_pendants(g: &Graph, tol: f64) -> Result<Graph, TransformError> {
    let mut run = Ascent::new(g, tol)?;
    exhaust(&mut run, pendant_step)?;
    Ok(run.finish().final_graph)
}

/// Connected cactus to connected max-edge cactus along a certified,
/// strictly ρ-increasing trace.
pub fn normalize_to_max_edge(g: &Graph, tol: f64) -> Result<TransformTrace, TransformError> {
    require_connected_cactus(g)?;
    let mut run = Ascent::new(g, tol)?;
    exhaust(&mut run, edge_maximal_step)?;
    while run.graph().order() >= 3 {
        let before = run.step_count();
        exhaust(&mut run, shrink_step)?;
        exhaust(&mut run, bridge_triangle_step)?;
        exhaust(&mut run, triangle_bridge_step)?;
        exhaust(&mut run, pendant_step)?;
        if run.step_count() == before {
            break;
        }
    }
    if !is_max_edge_cactus(run.graph()) {
        return Err(TransformError::pre(format!(
            "normalization stalled before reaching a max-edge cactus: {:?}",
            run.graph()
        )));
    }
    Ok(run.finish())
}
