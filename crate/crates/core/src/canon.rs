//! Canonical labeling for small graphs.
//!
//! Individualization-refinement search: colour refinement splits vertices by
//! neighbour counts per colour class, the first non-singleton class is
//! branched on, and the leaf whose relabeled adjacency bit string is largest
//! wins. Twin vertices (equal neighbourhoods apart from each other) are
//! swapped by an automorphism, so only one per twin class is branched on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::Graph;

/// Largest order accepted by [`canonical_label`].
pub const MAX_CANON_ORDER: usize = 12;

/// Upper-triangle adjacency bits of the canonically relabeled graph, pair
/// `(i, j)` in lexicographic order, first pair in the most significant bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={}, {:#x})", self.n, self.bits)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = pair_count(n);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> (total - 1 - pair_index(n, i, j)) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_canonical(n, edges)
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u16],
    best: Option<(u128, Vec<u8>)>,
}

impl Search<'_> {
    fn leaf_bits(&self, colors: &[u8]) -> u128 {
        let total = pair_count(self.n);
        let mut bits = 0u128;
        for u in 0..self.n {
            let mut row = self.adj[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                if u < v {
                    let (a, b) = (colors[u] as usize, colors[v] as usize);
                    let (a, b) = (a.min(b), a.max(b));
                    bits |= 1u128 << (total - 1 - pair_index(self.n, a, b));
                }
            }
        }
        bits
    }

    fn refine(&self, colors: &mut [u8]) {
        let n = self.n;
        let mut keys = vec![0u64; n];
        let mut order: Vec<usize> = (0..n).collect();
        loop {
            let mut masks = [0u16; MAX_CANON_ORDER];
            for v in 0..n {
                masks[colors[v] as usize] |= 1 << v;
            }
            let cells: Vec<usize> = (0..n).filter(|&c| masks[c] != 0).collect();
            if cells.len() == n {
                return;
            }
            for v in 0..n {
                let mut key = (colors[v] as u64) << 48;
                for (k, &c) in cells.iter().enumerate() {
                    let count = (self.adj[v] & masks[c]).count_ones() as u64;
                    key |= count << (4 * (MAX_CANON_ORDER - 1 - k));
                }
                keys[v] = key;
            }
            order.sort_unstable_by_key(|&v| keys[v]);
            let mut start = 0;
            let mut distinct = 0;
            for pos in 0..n {
                if pos == 0 || keys[order[pos]] != keys[order[pos - 1]] {
                    start = pos;
                    distinct += 1;
                }
                colors[order[pos]] = start as u8;
            }
            if distinct == cells.len() {
                return;
            }
        }
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        (self.adj[a] & !(1 << b)) == (self.adj[b] & !(1 << a))
    }

    fn run(&mut self, mut colors: Vec<u8>) {
        self.refine(&mut colors);
        let n = self.n;
        let mut sizes = [0usize; MAX_CANON_ORDER];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            let bits = self.leaf_bits(&colors);
            if self.best.as_ref().is_none_or(|(b, _)| bits > *b) {
                self.best = Some((bits, colors));
            }
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        for (i, &v) in cell.iter().enumerate() {
            if cell[..i].iter().any(|&w| self.twins(w, v)) {
                continue;
            }
            let mut child = colors.clone();
            for &w in &cell {
                if w != v {
                    child[w] = target as u8 + 1;
                }
            }
            self.run(child);
        }
    }
}

fn check_order(g: &Graph) -> Result<(), GraphError> {
    if g.order() > MAX_CANON_ORDER {
        return Err(GraphError::UnsupportedOrder {
            n: g.order(),
            max: MAX_CANON_ORDER,
        });
    }
    Ok(())
}

/// Canonical labeling: returns the permutation `perm` (vertex `v` maps to
/// `perm[v]`) together with the resulting canonical form.
pub fn canonical_labeling(g: &Graph) -> Result<(Vec<usize>, CanonicalForm), GraphError> {
    check_order(g)?;
    let n = g.order();
    let mut adj = vec![0u16; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut search = Search {
        n,
        adj: &adj,
        best: None,
    };
    search.run(vec![0; n]);
    let (bits, colors) = search.best.unwrap_or((0, Vec::new()));
    let perm = colors.into_iter().map(usize::from).collect();
    Ok((perm, CanonicalForm { n: n as u8, bits }))
}

/// Complete isomorphism invariant for graphs of order at most
/// [`MAX_CANON_ORDER`].
pub fn canonical_label(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g).map(|(_, form)| form)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    canonical_label(g).map(|form| form.to_graph())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.order() != b.order() || a.size() != b.size() {
        check_order(a)?;
        check_order(b)?;
        return Ok(false);
    }
    Ok(canonical_label(a)? == canonical_label(b)?)
}
