//! Biconnected blocks and the class predicates built on them.

use serde::Serialize;

use crate::graph::Graph;

/// Blocks (maximal biconnected subgraphs) and cut vertices of a graph.
///
/// Every edge lies in exactly one block. A block is either a single edge
/// (a bridge) or a 2-connected subgraph. Blocks are listed by their sorted
/// edge sets in lexicographic order; isolated vertices belong to no block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<(usize, usize)>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// Number of distinct vertices touched by block `i`.
    pub fn block_order(&self, i: usize) -> usize {
        let mut vs: Vec<usize> = self.blocks[i].iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs.len()
    }

    /// True when block `i` is a cycle (edge count equals vertex count).
    pub fn is_cycle_block(&self, i: usize) -> bool {
        let m = self.blocks[i].len();
        m >= 3 && m == self.block_order(i)
    }

    pub fn bridges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks.iter().filter(|b| b.len() == 1).map(|b| b[0])
    }
}

const UNSEEN: usize = usize::MAX;

struct Frame {
    v: usize,
    parent: usize,
    next: usize,
}

/// Standard edge-stack biconnected decomposition, iterative DFS.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        let mut stack = vec![Frame {
            v: root,
            parent: UNSEEN,
            next: 0,
        }];
        while let Some(top) = stack.last_mut() {
            let v = top.v;
            let nbrs = g.nbrs(v);
            if top.next < nbrs.len() {
                let w = nbrs[top.next];
                top.next += 1;
                if disc[w] == UNSEEN {
                    estack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if w != top.parent && disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let parent = top.parent;
                stack.pop();
                if parent == UNSEEN {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = estack.pop() {
                        block.push((a.min(b), a.max(b)));
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// Every block is a single edge or a cycle, i.e. any two cycles share at
/// most one vertex. Disconnected graphs are judged component-wise.
pub fn is_cactus(g: &Graph) -> bool {
    let bd = block_decomposition(g);
    (0..bd.blocks.len()).all(|i| bd.blocks[i].len() == 1 || bd.is_cycle_block(i))
}

/// Every cycle has odd length. Equivalent to every block being a single
/// edge or an odd cycle: a 2-connected block that is not a cycle always
/// carries an even cycle.
pub fn is_odd_cycle_graph(g: &Graph) -> bool {
    let bd = block_decomposition(g);
    (0..bd.blocks.len())
        .all(|i| bd.blocks[i].len() == 1 || (bd.is_cycle_block(i) && bd.blocks[i].len() % 2 == 1))
}

/// Connected with exactly `n` edges.
pub fn is_unicyclic(g: &Graph) -> bool {
    g.order() > 0 && g.size() == g.order() && g.is_connected()
}

/// Dimension of the cycle space: `m - n + c`.
pub fn cyclomatic_number(g: &Graph) -> usize {
    g.size() + g.components().len() - g.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;

    fn cycle(n: usize) -> Graph {
        make_graph(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn paw_blocks() {
        let paw = make_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let bd = block_decomposition(&paw);
        assert_eq!(bd.blocks, vec![vec![(0, 1), (0, 2), (1, 2)], vec![(0, 3)]]);
        assert_eq!(bd.cut_vertices, vec![0]);
    }

    #[test]
    fn cycle_is_one_block() {
        let bd = block_decomposition(&cycle(5));
        assert_eq!(bd.blocks.len(), 1);
        assert!(bd.cut_vertices.is_empty());
        assert!(bd.is_cycle_block(0));
    }

    #[test]
    fn path_blocks() {
        let p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let bd = block_decomposition(&p4);
        assert_eq!(bd.blocks, vec![vec![(0, 1)], vec![(1, 2)], vec![(2, 3)]]);
        assert_eq!(bd.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn root_cut_vertex_detected() {
        // bowtie centered at 0, where the DFS starts
        let bowtie = make_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let bd = block_decomposition(&bowtie);
        assert_eq!(bd.blocks.len(), 2);
        assert_eq!(bd.cut_vertices, vec![0]);
    }

    #[test]
    fn cactus_examples() {
        let bowtie = make_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert!(is_cactus(&bowtie));
        let k4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!is_cactus(&k4));
        let tree = make_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(is_cactus(&tree));
        // forest of cacti
        assert!(is_cactus(&cycle(3).disjoint_union(&cycle(4))));
    }

    #[test]
    fn odd_cycle_examples() {
        let bowtie = make_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert!(is_odd_cycle_graph(&bowtie));
        assert!(!is_odd_cycle_graph(&cycle(4)));
        assert!(is_odd_cycle_graph(&cycle(5)));
    }

    #[test]
    fn unicyclic_examples() {
        assert!(is_unicyclic(&cycle(4)));
        let p5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!is_unicyclic(&p5));
        let k4 = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!is_unicyclic(&k4));
        // n edges but disconnected
        assert!(!is_unicyclic(&cycle(4).disjoint_union(&cycle(3))));
        assert_eq!(cyclomatic_number(&k4), 3);
    }
}
