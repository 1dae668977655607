//! DIMACS edge-list format: `c` comment lines, a `p edge <n> <m>` header,
//! and `e <u> <v>` lines with 1-based vertex indices.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write as _;

pub fn parse(input: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(Error::Parse(format!("line {}: duplicate p line", lineno + 1)));
                }
                if parts.next() != Some("edge") {
                    return Err(Error::Parse(format!("line {}: expected 'p edge'", lineno + 1)));
                }
                let n = parse_field(parts.next(), lineno)?;
                let m = parse_field(parts.next(), lineno)?;
                header = Some((n, m));
            }
            Some("e") => {
                let u: usize = parse_field(parts.next(), lineno)?;
                let v: usize = parse_field(parts.next(), lineno)?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse(format!(
                        "line {}: DIMACS vertices are 1-based",
                        lineno + 1
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Parse(format!("line {}: unknown record '{other}'", lineno + 1)))
            }
            None => unreachable!(),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Parse("missing 'p edge' header".into()))?;
    if edges.len() != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

/// Writes the graph with edges sorted, so round trips are byte-stable.
pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

fn parse_field(field: Option<&str>, lineno: usize) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("line {}: missing field", lineno + 1)))?
        .parse()
        .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
}
