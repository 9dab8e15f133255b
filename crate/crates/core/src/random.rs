//! Seeded random graph generators for property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Reproducible generator used across the test suites and the CLI.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn shuffled(rng: &mut impl Rng, n: usize, edges: Vec<(usize, usize)>) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
        .expect("generator emits simple edges")
}

/// Uniform random recursive tree plus each remaining pair with probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            let present = edges.contains(&(u, v));
            if !present && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    shuffled(rng, n, edges)
}

/// Connected cactus grown by hanging bridges and cycles (length 3..=6) off
/// random existing vertices.
pub fn random_cactus(rng: &mut impl Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    let mut used = 1;
    while used < n {
        let at = rng.random_range(0..used);
        let room = n - used;
        let len = if room >= 2 && rng.random_bool(0.6) {
            rng.random_range(3..=(room + 1).min(6))
        } else {
            2
        };
        let mut prev = at;
        for _ in 1..len {
            edges.push((prev, used));
            prev = used;
            used += 1;
        }
        if len > 2 {
            edges.push((prev, at));
        }
    }
    shuffled(rng, n, edges)
}

/// Triangles glued at random vertices, `(k-1)/2` of them on `k` vertices.
fn triangle_tree(rng: &mut impl Rng, k: usize, offset: usize, edges: &mut Vec<(usize, usize)>) {
    debug_assert!(k % 2 == 1);
    let mut used = 1;
    while used < k {
        let at = offset + rng.random_range(0..used);
        let (a, b) = (offset + used, offset + used + 1);
        edges.extend([(at, a), (at, b), (a, b)]);
        used += 2;
    }
}

/// Connected cactus with the maximum edge count for its order (`n >= 3`).
///
/// Odd `n`: a tree of triangles. Even `n`: a tree of triangles on `n - 1`
/// vertices with one pendant edge, or two triangle trees joined by a bridge.
pub fn random_max_edge_cactus(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 3, "max-edge cactus generator needs n >= 3");
    let mut edges = Vec::new();
    if n % 2 == 1 {
        triangle_tree(rng, n, 0, &mut edges);
    } else if n >= 6 && rng.random_bool(0.5) {
        let left = 2 * rng.random_range(1..(n - 2) / 2) + 1;
        triangle_tree(rng, left, 0, &mut edges);
        triangle_tree(rng, n - left, left, &mut edges);
        edges.push((
            rng.random_range(0..left),
            left + rng.random_range(0..n - left),
        ));
    } else {
        triangle_tree(rng, n - 1, 0, &mut edges);
        edges.push((rng.random_range(0..n - 1), n - 1));
    }
    shuffled(rng, n, edges)
}

/// Unicyclic graph: a cycle of random length with random trees hung on it.
pub fn random_unicyclic(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 3, "unicyclic generator needs n >= 3");
    let k = rng.random_range(3..=n);
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for v in k..n {
        edges.push((rng.random_range(0..v), v));
    }
    shuffled(rng, n, edges)
}
