//! Isomorph-free generation of graph classes at small orders.
//!
//! Graphs are grown one edge at a time from the empty graph. Each level is
//! deduplicated by canonical form, and children failing a hereditary class
//! predicate (one closed under edge deletion) are dropped, so every member of
//! the class is still reached through members of the class.

mod cycles;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use cycles::{all_cycles, all_cycles_odd, cycles_share_at_most_one_vertex, MAX_CYCLE_ORDER};
pub use verify::{
    odd_cycle_sweep, report_csv, survey_class, verify_extremal, verify_max_edge_triangles,
    verify_odd_cycle_implies_cactus, ClassReport, OddCycleSweep, DEFAULT_GUARD,
};

use crate::blocks::{cyclomatic_number, is_cactus, is_odd_cycle_graph, is_unicyclic};
use crate::canon::{canonical_label, CanonicalForm};
use crate::error::EnumerationError;
use crate::families::is_max_edge_cactus;
use crate::graph::Graph;
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClassName {
    Cactus,
    MaxEdgeCactus,
    Unicyclic,
    OddCycle,
}

impl ClassName {
    pub const ALL: [ClassName; 4] = [
        ClassName::Cactus,
        ClassName::MaxEdgeCactus,
        ClassName::Unicyclic,
        ClassName::OddCycle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::Cactus => "CACTUS",
            ClassName::MaxEdgeCactus => "MAX_EDGE_CACTUS",
            ClassName::Unicyclic => "UNICYCLIC",
            ClassName::OddCycle => "ODD_CYCLE",
        }
    }

    /// Membership test for connected members of the class.
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            ClassName::Cactus => g.is_connected() && is_cactus(g),
            ClassName::MaxEdgeCactus => is_max_edge_cactus(g),
            ClassName::Unicyclic => is_unicyclic(g),
            ClassName::OddCycle => g.is_connected() && is_odd_cycle_graph(g),
        }
    }

    /// Hereditary envelope used to prune the augmentation.
    fn envelope(self, g: &Graph) -> bool {
        match self {
            ClassName::Cactus | ClassName::MaxEdgeCactus => is_cactus(g),
            ClassName::Unicyclic => cyclomatic_number(g) <= 1,
            ClassName::OddCycle => is_odd_cycle_graph(g),
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        match key.as_str() {
            "cactus" => Ok(ClassName::Cactus),
            "max-edge-cactus" | "max-edge" => Ok(ClassName::MaxEdgeCactus),
            "unicyclic" => Ok(ClassName::Unicyclic),
            "odd-cycle" => Ok(ClassName::OddCycle),
            _ => Err(format!(
                "unknown class {s:?} (expected cactus, max-edge-cactus, unicyclic or odd-cycle)"
            )),
        }
    }
}

/// Order ranges accepted by the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub min_class_order: usize,
    pub max_class_order: usize,
    /// Cap for sweeps over all connected graphs of an order.
    pub max_all_graphs_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            min_class_order: 3,
            max_class_order: 9,
            max_all_graphs_order: 8,
        }
    }
}

/// All graphs on `n` vertices (connected or not) satisfying a hereditary
/// predicate, one per isomorphism class, sorted by canonical form.
pub fn enumerate_hereditary<P>(n: usize, keep: P) -> Result<Vec<Graph>, EnumerationError>
where
    P: Fn(&Graph) -> bool + Sync + Send,
{
    let empty = Graph::empty(n);
    if !keep(&empty) {
        return Ok(Vec::new());
    }
    canonical_label(&empty)?;
    let mut level = vec![empty];
    let mut all = level.clone();
    while !level.is_empty() {
        let mut forms: Vec<CanonicalForm> = par::flat_map(&level, |g| {
            g.non_edges()
                .filter_map(|(u, v)| {
                    let child = g.with_edge(u, v).expect("non-edge");
                    keep(&child).then(|| canonical_label(&child).expect("order checked"))
                })
                .collect()
        });
        forms.sort_unstable();
        forms.dedup();
        level = forms.iter().map(CanonicalForm::to_graph).collect();
        all.extend(level.iter().cloned());
    }
    all.sort_by_cached_key(|g| canonical_label(g).expect("order checked"));
    Ok(all)
}

fn check_range(n: usize, min: usize, max: usize) -> Result<(), EnumerationError> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(EnumerationError::UnsupportedOrder { n, min, max })
    }
}

/// One canonical representative per isomorphism class of connected graphs
/// of order `n` in `class`, in canonical-form order.
pub fn enumerate_class(n: usize, class: ClassName) -> Result<Vec<Graph>, EnumerationError> {
    enumerate_class_with(n, class, &Limits::default())
}

pub fn enumerate_class_with(
    n: usize,
    class: ClassName,
    limits: &Limits,
) -> Result<Vec<Graph>, EnumerationError> {
    check_range(n, limits.min_class_order, limits.max_class_order)?;
    let envelope = enumerate_hereditary(n, |g| {
        class.envelope(g) && (class != ClassName::Unicyclic || g.size() <= n)
    })?;
    Ok(envelope.into_iter().filter(|g| class.contains(g)).collect())
}

/// Every connected graph of order `n`, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    enumerate_connected_with(n, &Limits::default())
}

pub fn enumerate_connected_with(n: usize, limits: &Limits) -> Result<Vec<Graph>, EnumerationError> {
    check_range(n, 1, limits.max_all_graphs_order)?;
    Ok(enumerate_hereditary(n, |_| true)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}
