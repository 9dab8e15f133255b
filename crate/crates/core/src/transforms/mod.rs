//! Spectral-radius-increasing rewrites and the ascent pipelines built on them.
//!
//! Every rewrite performed by a pipeline is certified: the Perron pair is
//! recomputed from scratch on the new graph and the step is kept only if
//! [`compare_results`] reports a strict increase beyond both residuals.

mod ascent;
mod normalize;
mod switch;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use ascent::{cactus_ascent, maximize_cactus, unicyclic_ascent};
pub use normalize::{
    add_consecutive_bridge_edges, consolidate_pendants, eliminate_triangle_bridge,
    make_edge_maximal, normalize_to_max_edge, shrink_cycle_once,
};
pub use switch::{certified_switch, find_switchable_pair, merge_high_degree, sigma_switch};

use crate::error::TransformError;
use crate::graph::Graph;
use crate::spectral::{compare_results, spectral_radius, PerronResult, RhoOrdering};

/// Perron entries closer than this count as equal when orienting a switch.
pub const ORIENTATION_GUARD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepKind {
    Switch,
    AddEdge,
    DeleteEdge,
    Merge,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Switch => "SWITCH",
            StepKind::AddEdge => "ADD_EDGE",
            StepKind::DeleteEdge => "DELETE_EDGE",
            StepKind::Merge => "MERGE",
        })
    }
}

/// One rewrite. For `Switch`/`Merge` the edges `v–m` for `m` in `moved` were
/// replaced by `u–m`; for `AddEdge`/`DeleteEdge` the edge is `u–v` and
/// `moved` is empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformStep {
    pub kind: StepKind,
    pub u: usize,
    pub v: usize,
    pub moved: Vec<usize>,
    pub rho_before: f64,
    pub rho_after: f64,
}

impl TransformStep {
    /// Applies the structural part of the step to `g`.
    pub fn apply(&self, g: &Graph) -> Result<Graph, TransformError> {
        Ok(match self.kind {
            StepKind::Switch | StepKind::Merge => sigma_switch(g, self.u, self.v, &self.moved)?,
            StepKind::AddEdge => g.with_edge(self.u, self.v)?,
            StepKind::DeleteEdge => g.without_edge(self.u, self.v)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformTrace {
    pub initial: Graph,
    pub steps: Vec<TransformStep>,
    #[serde(rename = "final")]
    pub final_graph: Graph,
}

impl TransformTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Initial graph followed by the graph after each step.
    pub fn graphs(&self) -> Result<Vec<Graph>, TransformError> {
        let mut out = vec![self.initial.clone()];
        for step in &self.steps {
            let next = step.apply(out.last().expect("non-empty"))?;
            out.push(next);
        }
        Ok(out)
    }

    /// Replays the steps from `initial`; the result must equal `final_graph`.
    pub fn replay(&self) -> Result<Graph, TransformError> {
        Ok(self.graphs()?.pop().expect("non-empty"))
    }

    /// Consecutive steps chain (`rho_after` feeds the next `rho_before`), no
    /// step decreases ρ, and switches, merges and edge additions increase it
    /// by more than `margin`.
    pub fn is_monotone(&self, margin: f64) -> bool {
        let chained = self
            .steps
            .windows(2)
            .all(|w| (w[0].rho_after - w[1].rho_before).abs() <= margin);
        let each = self.steps.iter().all(|s| match s.kind {
            StepKind::DeleteEdge => s.rho_after <= s.rho_before + margin,
            _ => s.rho_after - s.rho_before > margin,
        });
        chained && each
    }

    /// Appends `next`, whose initial graph must be this trace's final graph.
    pub fn then(mut self, next: TransformTrace) -> TransformTrace {
        debug_assert_eq!(self.final_graph, next.initial);
        self.steps.extend(next.steps);
        self.final_graph = next.final_graph;
        self
    }
}

/// Running state of an ascent: current graph and its Perron pair.
pub(crate) struct Ascent {
    initial: Graph,
    graph: Graph,
    perron: PerronResult,
    steps: Vec<TransformStep>,
    tol: f64,
}

impl Ascent {
    pub(crate) fn new(g: &Graph, tol: f64) -> Result<Self, TransformError> {
        Ok(Ascent {
            initial: g.clone(),
            graph: g.clone(),
            perron: spectral_radius(g, tol)?,
            steps: Vec::new(),
            tol,
        })
    }

    pub(crate) fn graph(&self) -> &Graph {
        &self.graph
    }

    pub(crate) fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// Orders `(a, b)` as `(u, v)` with `x_u ≥ x_v`; near-ties go to the
    /// lower label as `u`.
    pub(crate) fn orient(&self, a: usize, b: usize) -> (usize, usize) {
        orient(&self.perron, a, b)
    }

    fn certify(
        &mut self,
        kind: StepKind,
        u: usize,
        v: usize,
        moved: Vec<usize>,
        next: Graph,
    ) -> Result<(), TransformError> {
        let after = spectral_radius(&next, self.tol)?;
        if compare_results(&after, &self.perron, self.tol) != RhoOrdering::Greater {
            return Err(TransformError::NoIncrease {
                kind: kind.to_string(),
                u,
                v,
                rho_before: self.perron.rho,
                rho_after: after.rho,
                graph: serde_json::to_string(&self.graph).unwrap_or_default(),
            });
        }
        self.steps.push(TransformStep {
            kind,
            u,
            v,
            moved,
            rho_before: self.perron.rho,
            rho_after: after.rho,
        });
        self.graph = next;
        self.perron = after;
        Ok(())
    }

    pub(crate) fn switch(
        &mut self,
        kind: StepKind,
        u: usize,
        v: usize,
        moved: Vec<usize>,
    ) -> Result<(), TransformError> {
        let next = sigma_switch(&self.graph, u, v, &moved)?;
        self.certify(kind, u, v, moved, next)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), TransformError> {
        let next = self.graph.with_edge(u, v)?;
        self.certify(StepKind::AddEdge, u, v, Vec::new(), next)
    }

    pub(crate) fn finish(self) -> TransformTrace {
        TransformTrace {
            initial: self.initial,
            steps: self.steps,
            final_graph: self.graph,
        }
    }
}

pub(crate) fn orient(perron: &PerronResult, a: usize, b: usize) -> (usize, usize) {
    let (xa, xb) = (perron.vector[a], perron.vector[b]);
    if (xa - xb).abs() <= ORIENTATION_GUARD {
        (a.min(b), a.max(b))
    } else if xa > xb {
        (a, b)
    } else {
        (b, a)
    }
}

/// The deletion step `G − kl` with both spectral radii, for
/// checking that removing an edge never raises ρ.
pub fn delete_edge_step(
    g: &Graph,
    k: usize,
    l: usize,
    tol: f64,
) -> Result<(TransformStep, Graph), TransformError> {
    let next = g.without_edge(k, l)?;
    let before = spectral_radius(g, tol)?;
    let after = spectral_radius(&next, tol)?;
    Ok((
        TransformStep {
            kind: StepKind::DeleteEdge,
            u: k.min(l),
            v: k.max(l),
            moved: Vec::new(),
            rho_before: before.rho,
            rho_after: after.rho,
        },
        next,
    ))
}
