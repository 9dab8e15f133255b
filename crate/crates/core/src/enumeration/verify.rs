//! Exhaustive checks of the extremal claims, and their report formats.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{all_cycles_odd, enumerate_class_with, enumerate_connected_with, ClassName, Limits};
use crate::blocks::{block_decomposition, is_cactus, is_odd_cycle_graph};
use crate::canon::canonical_label;
use crate::error::EnumerationError;
use crate::families::{h_n, k1n_plus};
use crate::graph::Graph;
use crate::par;
use crate::spectral::{compare_results, spectral_radius, RhoOrdering, DEFAULT_TOL};

/// Separation required before two spectral radii count as different when
/// deciding uniqueness of the maximiser.
pub const DEFAULT_GUARD: f64 = 1e-8;

/// Spectral-radius survey of one class at one order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub n: usize,
    #[serde(rename = "class")]
    pub class_name: ClassName,
    #[serde(rename = "iso_classes")]
    pub iso_class_count: usize,
    pub max_rho: f64,
    /// Canonical representative of the maximiser.
    #[serde(rename = "argmax")]
    pub argmax_canonical: Graph,
    /// Exactly one class attains `max_rho` beyond the guard.
    #[serde(rename = "unique")]
    pub unique_argmax: bool,
    pub runtime_ms: u64,
}

/// Enumerates `class` at order `n` and locates its spectral maximiser.
/// Ties within `guard` (plus both residuals) clear `unique_argmax`.
pub fn survey_class(
    n: usize,
    class: ClassName,
    guard: f64,
    limits: &Limits,
) -> Result<(ClassReport, Vec<Graph>), EnumerationError> {
    let start = Instant::now();
    let graphs = enumerate_class_with(n, class, limits)?;
    let results = par::map(&graphs, |g| spectral_radius(g, DEFAULT_TOL))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let best = results
        .iter()
        .enumerate()
        .fold(0, |b, (i, r)| if r.rho > results[b].rho { i } else { b });
    let rivals: Vec<Graph> = results
        .iter()
        .enumerate()
        .filter(|&(i, r)| {
            i != best && compare_results(&results[best], r, guard) != RhoOrdering::Greater
        })
        .map(|(i, _)| graphs[i].clone())
        .collect();
    let report = ClassReport {
        n,
        class_name: class,
        iso_class_count: graphs.len(),
        max_rho: results[best].rho,
        argmax_canonical: graphs[best].clone(),
        unique_argmax: rivals.is_empty(),
        runtime_ms: start.elapsed().as_millis() as u64,
    };
    Ok((report, rivals))
}

/// The extremal graph the class is claimed to be maximised by.
pub fn expected_extremal(n: usize, class: ClassName) -> Result<Graph, EnumerationError> {
    let g = match class {
        ClassName::Unicyclic => k1n_plus(n)?,
        ClassName::Cactus | ClassName::MaxEdgeCactus | ClassName::OddCycle => h_n(n)?,
    };
    Ok(g)
}

/// Confirms that the unique spectral maximiser of `class` at order `n` is
/// `H_n` (cactus classes) or `K_{1,n-1}^+` (unicyclic). Any failure comes
/// back as a counterexample graph.
pub fn verify_extremal(
    n: usize,
    class: ClassName,
    guard: f64,
) -> Result<ClassReport, EnumerationError> {
    let (report, rivals) = survey_class(n, class, guard, &Limits::default())?;
    let expected = expected_extremal(n, class)?;
    if canonical_label(&report.argmax_canonical)? != canonical_label(&expected)? {
        return Err(EnumerationError::Counterexample {
            claim: format!("{class} maximiser is the extremal graph"),
            n,
            graph: Box::new(report.argmax_canonical),
        });
    }
    if let Some(rival) = rivals.into_iter().next() {
        return Err(EnumerationError::Counterexample {
            claim: format!("{class} maximiser is unique"),
            n,
            graph: Box::new(rival),
        });
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OddCycleSweep {
    pub n: usize,
    pub connected_graphs: usize,
    pub odd_cycle_graphs: usize,
}

/// Over all connected graphs of order `n`: the block-based odd-cycle test
/// must agree with explicit cycle parity, and every odd-cycle graph must be
/// a cactus.
pub fn odd_cycle_sweep(n: usize, limits: &Limits) -> Result<OddCycleSweep, EnumerationError> {
    let graphs = enumerate_connected_with(n, limits)?;
    let verdicts = par::map(
        &graphs,
        |g| -> Result<Option<&'static str>, EnumerationError> {
            let odd = is_odd_cycle_graph(g);
            if odd != all_cycles_odd(g)? {
                return Ok(Some("odd-cycle test agrees with cycle parity"));
            }
            if odd && !is_cactus(g) {
                return Ok(Some("every odd-cycle graph is a cactus"));
            }
            Ok(None)
        },
    );
    let mut odd_count = 0;
    for (g, verdict) in graphs.iter().zip(verdicts) {
        if let Some(claim) = verdict? {
            return Err(EnumerationError::Counterexample {
                claim: claim.to_string(),
                n,
                graph: Box::new(g.clone()),
            });
        }
        if is_odd_cycle_graph(g) {
            odd_count += 1;
        }
    }
    Ok(OddCycleSweep {
        n,
        connected_graphs: graphs.len(),
        odd_cycle_graphs: odd_count,
    })
}

pub fn verify_odd_cycle_implies_cactus(n: usize) -> Result<bool, EnumerationError> {
    odd_cycle_sweep(n, &Limits::default()).map(|_| true)
}

/// Checks that every max-edge cactus of order `n` other than `C_4` has only
/// triangle blocks and at most one bridge. Returns the number of graphs
/// checked. This fails at even `n >= 6`, where a 4-cycle block can stand in
/// for the bridge.
pub fn verify_max_edge_triangles(n: usize) -> Result<usize, EnumerationError> {
    let graphs = enumerate_class_with(n, ClassName::MaxEdgeCactus, &Limits::default())?;
    for g in &graphs {
        if n == 4 && g.max_degree() == 2 {
            continue;
        }
        let bd = block_decomposition(g);
        let triangles = bd.blocks.iter().all(|b| matches!(b.len(), 1 | 3));
        if !triangles || bd.bridges().count() > 1 {
            return Err(EnumerationError::Counterexample {
                claim: "max-edge cactus has triangle blocks and at most one bridge".into(),
                n,
                graph: Box::new(g.clone()),
            });
        }
    }
    Ok(graphs.len())
}

#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    class: &'a str,
    iso_classes: usize,
    max_rho: f64,
    argmax: String,
    unique: bool,
    runtime_ms: u64,
}

/// CSV with header `n,class,iso_classes,max_rho,argmax,unique,runtime_ms`;
/// `argmax` is the canonical edge list, e.g. `"[[0,1],[0,2]]"`.
pub fn report_csv(reports: &[ClassReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        let edges: Vec<String> = r
            .argmax_canonical
            .edges()
            .iter()
            .map(|(u, v)| format!("[{u},{v}]"))
            .collect();
        w.serialize(CsvRow {
            n: r.n,
            class: r.class_name.as_str(),
            iso_classes: r.iso_class_count,
            max_rho: r.max_rho,
            argmax: format!("[{}]", edges.join(",")),
            unique: r.unique_argmax,
            runtime_ms: r.runtime_ms,
        })
        .expect("in-memory csv write");
    }
    let bytes = w.into_inner().expect("in-memory csv flush");
    let text = String::from_utf8(bytes).expect("csv output is utf-8");
    if reports.is_empty() {
        "n,class,iso_classes,max_rho,argmax,unique,runtime_ms\n".to_string()
    } else {
        text
    }
}
