//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// An immutable simple undirected graph.
///
/// Vertices are `0..n`. The edge list is canonical: each pair is stored as
/// `(min, max)` and the list is sorted lexicographically, so two graphs with
/// the same vertex count and edge set compare equal regardless of how they
/// were built.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(repr: GraphRepr) -> Result<Self, Self::Error> {
        Graph::new(repr.n, repr.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Builds a canonical graph from an edge list in any order and orientation.
pub fn make_graph<I>(n: usize, edge_list: I) -> Result<Graph, GraphError>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    Graph::new(n, edge_list)
}

impl Graph {
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            let pair = (u.min(v), u.max(v));
            if !seen.insert(pair) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
        }
        Ok(Self::from_canonical(n, seen.into_iter().collect()))
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    /// `edges` must already be sorted, deduplicated, oriented and in range.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, each pair `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> Result<&[usize], GraphError> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// Unchecked neighbor slice; panics when `v` is out of range.
    pub(crate) fn nbrs(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.neighbors(v).map(<[usize]>::len)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Largest vertex degree, 0 for the edgeless and the null graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    /// The null graph and a single vertex are connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    /// Vertices reachable from `start`, in BFS order.
    pub(crate) fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = vec![start];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = self.component_of(s);
            for &v in &comp {
                seen[v] = true;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Number of vertices of degree at least 3.
    pub fn t_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() >= 3).count()
    }

    /// `N(a) \ (N(b) ∪ {b})`, sorted.
    pub fn private_neighbors(&self, a: usize, b: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(self.adj[a]
            .iter()
            .copied()
            .filter(|&w| w != b && !self.has_edge(b, w))
            .collect())
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.adj[u].iter().filter(|&&w| self.has_edge(v, w)).count())
    }

    /// Copy with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        let pair = (u.min(v), u.max(v));
        match self.edges.binary_search(&pair) {
            Ok(_) => Err(GraphError::DuplicateEdge { u, v }),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, pair);
                Ok(Self::from_canonical(self.n, edges))
            }
        }
    }

    /// Copy with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let pair = (u.min(v), u.max(v));
        match self.edges.binary_search(&pair) {
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Self::from_canonical(self.n, edges))
            }
            Err(_) => Err(GraphError::MissingEdge { u, v }),
        }
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return Err(GraphError::BadPermutation);
            }
            hit[p] = true;
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_canonical(self.n + other.n, edges)
    }

    /// Non-adjacent vertex pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }
}
