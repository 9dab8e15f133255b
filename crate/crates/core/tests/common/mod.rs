//! Independent oracles for the integration tests. Nothing here calls the
//! library's eigensolver, block decomposition or canonical labeling.

#![allow(dead_code)]

use std::collections::BTreeSet;

use spext_core::{make_graph, Graph};

/// Characteristic polynomial `det(λI − A)` by Faddeev–LeVerrier in exact
/// integer arithmetic. Coefficients are returned highest degree first.
pub fn char_poly(g: &Graph) -> Vec<i128> {
    let n = g.order();
    let mut a = vec![vec![0i128; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1;
        a[v][u] = 1;
    }
    let mut coeffs = vec![1i128];
    let mut m = vec![vec![0i128; n]; n];
    let mut c_prev = 1i128;
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = mat_mul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += c_prev;
        }
        let am = mat_mul(&a, &next);
        let trace: i128 = (0..n).map(|i| am[i][i]).sum();
        assert_eq!(
            trace % k as i128,
            0,
            "Faddeev–LeVerrier division must be exact"
        );
        let c = -trace / k as i128;
        coeffs.push(c);
        m = next;
        c_prev = c;
    }
    coeffs
}

fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

pub fn eval(poly: &[f64], x: f64) -> f64 {
    poly.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(poly: &[f64]) -> Vec<f64> {
    let deg = poly.len() - 1;
    poly[..deg]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (deg - i) as f64)
        .collect()
}

/// Bisection on `[lo, hi]` for a sign change of `f`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = f(lo);
    assert!(f_lo * f(hi) <= 0.0, "no sign change on [{lo}, {hi}]");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) * f_lo > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Largest root of a monic real-rooted polynomial whose roots all lie below
/// `upper`. Above the largest root of the derivative the polynomial is
/// monotone, so the root is bracketed there.
pub fn largest_real_root(poly: &[f64], upper: f64) -> f64 {
    match poly.len() {
        0 | 1 => panic!("constant polynomial"),
        2 => -poly[1] / poly[0],
        _ => {
            let lo = largest_real_root(&derivative(poly), upper);
            if eval(poly, lo) >= 0.0 {
                lo
            } else {
                bisect(|x| eval(poly, x), lo, upper)
            }
        }
    }
}

/// Spectral radius from the characteristic polynomial.
pub fn oracle_rho(g: &Graph) -> f64 {
    if g.size() == 0 {
        return 0.0;
    }
    let poly: Vec<f64> = char_poly(g).into_iter().map(|c| c as f64).collect();
    largest_real_root(&poly, g.order() as f64)
}

/// Number of simple `a`–`b` paths avoiding the edge `a–b`, split by parity
/// of the path length.
fn detour_paths(g: &Graph, a: usize, b: usize) -> (usize, usize) {
    fn walk(
        g: &Graph,
        at: usize,
        b: usize,
        a: usize,
        len: usize,
        seen: &mut Vec<bool>,
        out: &mut (usize, usize),
    ) {
        for &w in g.neighbors(at).unwrap() {
            if at == a && w == b {
                continue;
            }
            if w == b {
                if (len + 1).is_multiple_of(2) {
                    out.0 += 1;
                } else {
                    out.1 += 1;
                }
            } else if !seen[w] {
                seen[w] = true;
                walk(g, w, b, a, len + 1, seen, out);
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; g.order()];
    seen[a] = true;
    let mut out = (0, 0);
    walk(g, a, b, a, 0, &mut seen, &mut out);
    out
}

/// Cactus test: every edge lies on at most one cycle.
pub fn oracle_is_cactus(g: &Graph) -> bool {
    g.edges().iter().all(|&(a, b)| {
        let (even, odd) = detour_paths(g, a, b);
        even + odd <= 1
    })
}

/// Every cycle has odd length: every detour around an edge has even length.
pub fn oracle_all_cycles_odd(g: &Graph) -> bool {
    g.edges().iter().all(|&(a, b)| detour_paths(g, a, b).1 == 0)
}

/// Connected by breadth-first search over an adjacency matrix.
pub fn oracle_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in g.edges() {
            for (p, q) in [(a, b), (b, a)] {
                if p == x && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn oracle_is_unicyclic(g: &Graph) -> bool {
    oracle_connected(g) && g.size() == g.order()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// All labeled graphs on `n ≤ 6` vertices satisfying `keep`, reduced to one
/// per isomorphism class by minimising the edge bitmask over all vertex
/// permutations.
pub fn labeled_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!(n <= 6, "brute-force oracle is limited to n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let mapped: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut classes = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i]);
        let g = make_graph(n, edges).unwrap();
        if !keep(&g) {
            continue;
        }
        let canon = mapped
            .iter()
            .map(|m| {
                (0..pairs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc | 1 << m[i])
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes
        .into_iter()
        .map(|mask| {
            make_graph(
                n,
                (0..pairs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| pairs[i]),
            )
            .unwrap()
        })
        .collect()
}

/// Isomorphism by trying every permutation; `n ≤ 8`.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    permutations(a.order())
        .iter()
        .any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

/// Largest eigenvalue by cyclic Jacobi rotations on the dense adjacency matrix.
pub fn jacobi_max_eigenvalue(g: &Graph) -> f64 {
    let n = g.order();
    let mut a = vec![vec![0.0f64; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (row_p, row_q) = (a[p].clone(), a[q].clone());
                for k in 0..n {
                    a[p][k] = c * row_p[k] - s * row_q[k];
                    a[q][k] = s * row_p[k] + c * row_q[k];
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

/// A uniformly chosen valid switch `(u, v, S)` on `g` with `x_u ≥ x_v` for
/// the supplied Perron vector: `S` is a random non-empty subset of
/// `N(v) \ (N(u) ∪ {u})`.
pub fn random_valid_switch(
    rng: &mut impl rand::Rng,
    g: &Graph,
    x: &[f64],
) -> Option<(usize, usize, Vec<usize>)> {
    let n = g.order();
    let candidates: Vec<(usize, usize, Vec<usize>)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && x[u] >= x[v])
        .filter_map(|(u, v)| {
            let private: Vec<usize> = g
                .neighbors(v)
                .unwrap()
                .iter()
                .copied()
                .filter(|&s| s != u && !g.has_edge(u, s))
                .collect();
            (!private.is_empty()).then_some((u, v, private))
        })
        .collect();
    if candidates.is_empty() {
        return None;
    }
    let (u, v, private) = candidates[rng.random_range(0..candidates.len())].clone();
    let mut moved: Vec<usize> = private
        .iter()
        .copied()
        .filter(|_| rng.random_bool(0.5))
        .collect();
    if moved.is_empty() {
        moved.push(private[rng.random_range(0..private.len())]);
    }
    Some((u, v, moved))
}

/// Vertex-transitive test graphs, where every Perron entry is equal.
pub fn symmetric_graph(rng: &mut impl rand::Rng, n: usize) -> Graph {
    // circulant C_n(1, k)
    let k = rng.random_range(1..=n / 2);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..n {
        for step in [1, k] {
            let j = (i + step) % n;
            if i != j {
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    make_graph(n, edges).unwrap()
}
