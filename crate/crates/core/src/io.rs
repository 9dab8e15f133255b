//! Edge-list text format.
//!
//! ```text
//! # comments run from '#' to end of line
//! n m
//! u v      (m lines, 0-based endpoints)
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = text.split_whitespace();
    let mut next = |name: &str| -> Result<usize, ParseError> {
        let tok = fields
            .next()
            .ok_or_else(|| err(line, format!("expected {what}, missing {name}")))?;
        tok.parse().map_err(|_| {
            err(
                line,
                format!("{name} is not a non-negative integer: {tok:?}"),
            )
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(err(line, format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header_line, header, "header \"n m\"")?;

    let mut edges = Vec::with_capacity(m);
    let mut origin = BTreeMap::new();
    for (line, body) in lines.by_ref().take(m) {
        let (u, v) = parse_pair(line, body, "edge \"u v\"")?;
        if let Some(first) = origin.insert((u.min(v), u.max(v)), line) {
            return Err(err(
                line,
                format!("duplicate edge ({u}, {v}), first given on line {first}"),
            ));
        }
        if u >= n || v >= n {
            return Err(err(
                line,
                format!("edge ({u}, {v}) has an endpoint outside 0..{n}"),
            ));
        }
        if u == v {
            return Err(err(line, format!("self-loop ({u}, {v})")));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        let last = text.lines().count().max(1);
        return Err(err(
            last,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, format!("more than the {m} declared edges")));
    }
    Graph::new(n, edges).map_err(|e: GraphError| err(header_line, e.to_string()))
}

/// Canonical text rendering; parsing it back yields the same graph.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
