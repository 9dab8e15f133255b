//! Explicit simple-cycle enumeration, the exponential oracle behind the
//! block-based class predicates.

use crate::error::EnumerationError;
use crate::graph::Graph;

/// Largest order accepted by [`all_cycles`].
pub const MAX_CYCLE_ORDER: usize = 9;

/// Every simple cycle of `g` exactly once, as a vertex sequence starting at
/// its least vertex and oriented so the second vertex is smaller than the
/// last.
pub fn all_cycles(g: &Graph) -> Result<Vec<Vec<usize>>, EnumerationError> {
    let n = g.order();
    if n > MAX_CYCLE_ORDER {
        return Err(EnumerationError::UnsupportedOrder {
            n,
            min: 0,
            max: MAX_CYCLE_ORDER,
        });
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        let mut path = vec![start];
        on_path[start] = true;
        extend(g, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
    }
    Ok(out)
}

fn extend(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("path starts non-empty");
    for &w in g.nbrs(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, start, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Definitional cactus test: any two distinct cycles share at most one vertex.
pub fn cycles_share_at_most_one_vertex(g: &Graph) -> Result<bool, EnumerationError> {
    let cycles = all_cycles(g)?;
    let masks: Vec<u64> = cycles
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    Ok(masks
        .iter()
        .enumerate()
        .all(|(i, a)| masks[i + 1..].iter().all(|b| (a & b).count_ones() <= 1)))
}

/// Definitional odd-cycle test: every enumerated cycle has odd length.
pub fn all_cycles_odd(g: &Graph) -> Result<bool, EnumerationError> {
    Ok(all_cycles(g)?.iter().all(|c| c.len() % 2 == 1))
}
