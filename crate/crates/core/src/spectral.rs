//! Spectral radius and Perron vector of an adjacency matrix.
//!
//! Power iteration runs on `A + I`: the shift keeps eigenvectors, moves the
//! spectrum to `λ + 1`, and removes the `±ρ` tie of bipartite graphs, so the
//! iteration from the uniform positive vector converges to the Perron pair.
//! Each connected component is solved separately and the largest wins.

use serde::{Deserialize, Serialize};

use crate::error::SpectralError;
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;

/// Dominant eigenpair estimate.
///
/// `residual` is `‖A·x − ρ·x‖₂`; for a symmetric matrix some eigenvalue lies
/// within `residual` of `rho`, which is the bound [`compare_results`] uses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerronResult {
    pub rho: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RhoOrdering {
    Less,
    Greater,
    Indistinguishable,
}

/// Matrix-vector products allowed for a graph of order `n`.
pub fn iteration_cap(n: usize) -> usize {
    100 * n * n
}

fn residual_of(g: &Graph, x: &[f64], rho: f64) -> f64 {
    let mut ax = vec![0.0; g.order()];
    for &(u, v) in g.edges() {
        ax[u] += x[v];
        ax[v] += x[u];
    }
    ax.iter()
        .zip(x)
        .map(|(a, xi)| (a - rho * xi).powi(2))
        .sum::<f64>()
        .sqrt()
}

struct Local {
    rho: f64,
    x: Vec<f64>,
    residual: f64,
    iterations: usize,
}

/// Power iteration on one connected component given as local adjacency.
fn solve_component(adj: &[Vec<usize>], tol: f64, cap: usize) -> Result<Local, SpectralError> {
    let k = adj.len();
    if k == 1 {
        return Ok(Local {
            rho: 0.0,
            x: vec![1.0],
            residual: 0.0,
            iterations: 0,
        });
    }
    let mut x = vec![1.0 / (k as f64).sqrt(); k];
    let mut ax = vec![0.0; k];
    let mut best = (0.0, f64::INFINITY);
    for it in 1..=cap {
        for (i, nbrs) in adj.iter().enumerate() {
            ax[i] = nbrs.iter().map(|&j| x[j]).sum();
        }
        let rho: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let residual = ax
            .iter()
            .zip(&x)
            .map(|(a, xi)| (a - rho * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual < best.1 {
            best = (rho, residual);
        }
        if residual <= tol {
            return Ok(Local {
                rho,
                x,
                residual,
                iterations: it,
            });
        }
        let mut norm = 0.0;
        for (xi, a) in x.iter_mut().zip(&ax) {
            *xi += a;
            norm += *xi * *xi;
        }
        let norm = norm.sqrt();
        x.iter_mut().for_each(|xi| *xi /= norm);
    }
    Err(SpectralError::NonConvergence {
        rho: best.0,
        residual: best.1,
        iterations: cap,
    })
}

/// Spectral radius and Perron vector of `g`.
///
/// Edgeless graphs give `rho = 0` with the uniform unit vector. For a
/// disconnected graph the vector is supported on the component of largest
/// spectral radius (first such component on ties).
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<PerronResult, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::NullGraph);
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::BadTolerance(tol));
    }
    if g.size() == 0 {
        return Ok(PerronResult {
            rho: 0.0,
            vector: vec![1.0 / (n as f64).sqrt(); n],
            residual: 0.0,
            iterations: 0,
        });
    }

    let cap = iteration_cap(n);
    let mut local_index = vec![0usize; n];
    let mut best: Option<(Vec<usize>, Local)> = None;
    let mut total_iterations = 0;
    for comp in g.components() {
        for (i, &v) in comp.iter().enumerate() {
            local_index[v] = i;
        }
        let adj: Vec<Vec<usize>> = comp
            .iter()
            .map(|&v| g.nbrs(v).iter().map(|&w| local_index[w]).collect())
            .collect();
        let sol = solve_component(&adj, tol, cap)?;
        total_iterations += sol.iterations;
        if best.as_ref().is_none_or(|(_, b)| sol.rho > b.rho) {
            best = Some((comp, sol));
        }
    }
    let (comp, sol) = best.expect("n >= 1 gives at least one component");
    let mut vector = vec![0.0; n];
    for (i, &v) in comp.iter().enumerate() {
        vector[v] = sol.x[i];
    }
    let residual = residual_of(g, &vector, sol.rho).max(sol.residual);
    Ok(PerronResult {
        rho: sol.rho,
        vector,
        residual,
        iterations: total_iterations,
    })
}

/// Three-valued comparison that never claims an order the error bounds
/// cannot support: `Greater` iff `a.rho − b.rho > a.residual + b.residual + tol`.
pub fn compare_results(a: &PerronResult, b: &PerronResult, tol: f64) -> RhoOrdering {
    let guard = a.residual + b.residual + tol;
    let diff = a.rho - b.rho;
    if diff > guard {
        RhoOrdering::Greater
    } else if -diff > guard {
        RhoOrdering::Less
    } else {
        RhoOrdering::Indistinguishable
    }
}

pub fn compare_rho(g1: &Graph, g2: &Graph, tol: f64) -> Result<RhoOrdering, SpectralError> {
    let a = spectral_radius(g1, tol)?;
    let b = spectral_radius(g2, tol)?;
    Ok(compare_results(&a, &b, tol))
}
