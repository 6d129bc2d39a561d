//! Edge-list text formats.
//!
//! Graph files: first non-comment line `n m`, then `m` lines `u v`
//! (space-separated 0-based decimal). Lines starting with `#` are ignored.
//! A trailing newline is required on write. Shortcut/spanner files carry
//! `u v` lines only.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{build_graph, DiGraph};

pub fn parse_graph(text: &str) -> Result<DiGraph> {
    let mut lines = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), "n")?;
    let m: usize = parse_field(it.next(), "m")?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), "u")?;
        let v: usize = parse_field(it.next(), "v")?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    build_graph(n, &edges)
}

fn parse_field(field: Option<&str>, name: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::Parse(format!("missing field `{name}`")))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad `{name}`: {e}")))
}

pub fn format_graph(g: &DiGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_graph(path: &Path) -> Result<DiGraph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: &Path, g: &DiGraph) -> Result<()> {
    Ok(std::fs::write(path, format_graph(g))?)
}

/// Parses a `u v`-per-line edge set (shortcut or spanner file).
pub fn parse_edge_set(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for line in text.lines() {
        if line.trim_start().starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), "u")?;
        let v: usize = parse_field(it.next(), "v")?;
        edges.push((u, v));
    }
    Ok(edges)
}

pub fn format_edge_set(edges: impl IntoIterator<Item = (usize, usize)>) -> String {
    let mut sorted: Vec<_> = edges.into_iter().collect();
    sorted.sort_unstable();
    let mut out = String::new();
    for (u, v) in sorted {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_edge_set(path: &Path) -> Result<Vec<(usize, usize)>> {
    parse_edge_set(&std::fs::read_to_string(path)?)
}

pub fn write_edge_set(path: &Path, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<()> {
    Ok(std::fs::write(path, format_edge_set(edges))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = build_graph(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let text = format_graph(&g);
        assert_eq!(text, "5 3\n0 1\n1 2\n3 4\n");
        let g2 = parse_graph(&text).unwrap();
        assert_eq!(g2.edges(), g.edges());
        assert_eq!(g2.n(), 5);
    }

    #[test]
    fn comments_ignored() {
        let g = parse_graph("# a comment\n3 2\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn bad_header_is_an_error() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("3\n").is_err());
        assert!(parse_graph("3 2\n0 1\n").is_err());
    }
}
