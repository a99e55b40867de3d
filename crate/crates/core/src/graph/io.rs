//! Plain-text graph format: a header line `n m`, then `m` lines `u v`.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the text format. Endpoints may appear in either order; duplicate
/// edges, self-loops, out-of-range endpoints and a wrong edge count are
/// rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::input("empty graph file"))?;
    let [n, m] = parse_pair(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        edges.push(parse_pair(line, idx + 1).map(|[u, v]| (u, v))?);
    }
    if edges.len() != m {
        return Err(Error::input(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str, lineno: usize) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::input(format!("line {lineno}: expected two integers, got {line:?}"))),
    }
}

/// Writes the text format with edges as `u v`, `u < v`, in lexicographic
/// order and a trailing newline.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
