use super::normalize::{exhaust, normalize_to_max_edge, shrink_step};
use super::{Ascent, StepKind, TransformTrace};
use crate::blocks::is_unicyclic;
use crate::error::TransformError;
use crate::families::is_max_edge_cactus;
use crate::graph::Graph;

/// Switches a unicyclic graph up to `K_{1,n-1}^+`. Each step takes the least
/// edge whose endpoints both have private neighbours, orients it by the
/// Perron vector and moves all private neighbours of the lower endpoint.
pub fn unicyclic_ascent(g: &Graph, tol: f64) -> Result<TransformTrace, TransformError> {
    if !is_unicyclic(g) {
        return Err(TransformError::pre(
            "unicyclic ascent needs a connected unicyclic graph",
        ));
    }
    let mut run = Ascent::new(g, tol)?;
    while let Some((a, b)) = super::find_switchable_pair(run.graph())? {
        let (u, v) = run.orient(a, b);
        let moved = run.graph().private_neighbors(v, u)?;
        run.switch(StepKind::Switch, u, v, moved)?;
        if !is_unicyclic(run.graph()) {
            return Err(TransformError::pre("switch left the unicyclic class"));
        }
    }
    Ok(run.finish())
}

/// Merges adjacent vertices of degree ≥ 3 in a max-edge cactus until only
/// one remains, ending at `H_n`. Every merge keeps the graph a max-edge
/// cactus and lowers the count of degree-≥3 vertices by one.
///
/// For even `n ≥ 6` a max-edge cactus may contain one 4-cycle block in place
/// of its single bridge. That block is first shrunk to a triangle plus a
/// pendant edge by a cycle-shrinking switch, which keeps the edge count.
/// `C_4` itself is returned unchanged.
pub fn cactus_ascent(g: &Graph, tol: f64) -> Result<TransformTrace, TransformError> {
    if g.order() < 3 || !is_max_edge_cactus(g) {
        return Err(TransformError::pre(
            "cactus ascent needs a connected max-edge cactus on at least 3 vertices",
        ));
    }
    let mut run = Ascent::new(g, tol)?;
    if g.order() > 4 {
        exhaust(&mut run, shrink_step)?;
    }
    loop {
        let t = run.graph().t_count();
        if t <= 1 {
            break;
        }
        let pair = run
            .graph()
            .edges()
            .iter()
            .copied()
            .find(|&(a, b)| run.graph().nbrs(a).len() >= 3 && run.graph().nbrs(b).len() >= 3);
        let Some((a, b)) = pair else {
            return Err(TransformError::pre(
                "no adjacent pair of degree-3 vertices to merge",
            ));
        };
        let (u, v) = run.orient(a, b);
        let moved = run.graph().private_neighbors(v, u)?;
        run.switch(StepKind::Merge, u, v, moved)?;
        if !is_max_edge_cactus(run.graph()) || run.graph().t_count() + 1 != t {
            return Err(TransformError::pre(format!(
                "merge of {u} and {v} broke the max-edge cactus invariant"
            )));
        }
    }
    Ok(run.finish())
}

/// Any connected cactus to `H_n`: normalization to a max-edge cactus
/// followed by the merge ascent.
pub fn maximize_cactus(g: &Graph, tol: f64) -> Result<TransformTrace, TransformError> {
    let normalized = normalize_to_max_edge(g, tol)?;
    if g.order() < 3 {
        return Ok(normalized);
    }
    let merged = cactus_ascent(&normalized.final_graph, tol)?;
    Ok(normalized.then(merged))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::families::{cycle, h_n, k1n_plus, path, star};
    use crate::graph::make_graph;
    use crate::spectral::DEFAULT_TOL;

    #[test]
    fn unicyclic_reaches_k1n_plus() {
        for n in 3..=9 {
            let trace = unicyclic_ascent(&cycle(n).unwrap(), DEFAULT_TOL).unwrap();
            assert!(is_isomorphic(&trace.final_graph, &k1n_plus(n).unwrap()).unwrap());
            assert!(trace.is_monotone(DEFAULT_TOL));
        }
        assert!(unicyclic_ascent(&k1n_plus(6).unwrap(), DEFAULT_TOL)
            .unwrap()
            .is_empty());
        assert!(unicyclic_ascent(&path(5).unwrap(), DEFAULT_TOL).is_err());
    }

    #[test]
    fn cactus_ascent_on_triangle_chain() {
        // four triangles in a chain
        let g = make_graph(
            9,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (2, 4),
                (4, 5),
                (5, 6),
                (4, 6),
                (6, 7),
                (7, 8),
                (6, 8),
            ],
        )
        .unwrap();
        let trace = cactus_ascent(&g, DEFAULT_TOL).unwrap();
        assert_eq!(trace.steps.len(), 2);
        assert!(trace.steps.iter().all(|s| s.kind == StepKind::Merge));
        assert!(is_isomorphic(&trace.final_graph, &h_n(9).unwrap()).unwrap());
        assert!(cactus_ascent(&cycle(5).unwrap(), DEFAULT_TOL).is_err());
        let c4 = cactus_ascent(&cycle(4).unwrap(), DEFAULT_TOL).unwrap();
        assert!(c4.is_empty());
    }

    #[test]
    fn four_cycle_block_is_shrunk_first() {
        // C4 on 0-1-2-3 with a triangle at 0 and one at 2
        let g = make_graph(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (4, 5),
                (0, 5),
                (2, 6),
                (6, 7),
                (2, 7),
            ],
        )
        .unwrap();
        assert!(is_max_edge_cactus(&g));
        assert_eq!(g.t_count(), 2);
        assert!(!g
            .edges()
            .iter()
            .any(|&(a, b)| g.nbrs(a).len() >= 3 && g.nbrs(b).len() >= 3));
        let trace = cactus_ascent(&g, DEFAULT_TOL).unwrap();
        assert_eq!(trace.steps[0].kind, StepKind::Switch);
        assert!(is_isomorphic(&trace.final_graph, &h_n(8).unwrap()).unwrap());
        assert!(trace.is_monotone(DEFAULT_TOL));
    }

    #[test]
    fn maximize_examples() {
        for g in [
            path(8).unwrap(),
            star(7).unwrap(),
            cycle(9).unwrap(),
            path(2).unwrap(),
        ] {
            let n = g.order();
            let trace = maximize_cactus(&g, DEFAULT_TOL).unwrap();
            assert!(is_isomorphic(&trace.final_graph, &h_n(n.max(3)).unwrap()).unwrap() || n < 3);
            assert!(trace.is_monotone(DEFAULT_TOL));
            assert_eq!(trace.replay().unwrap(), trace.final_graph);
        }
        let disconnected = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap());
        assert!(maximize_cactus(&disconnected, DEFAULT_TOL).is_err());
    }
}
