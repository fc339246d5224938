//! Plain-text graph formats.
//!
//! `.ug`: first line `n m`, then `m` lines `u v` with `u < v`, sorted.
//! `.dg`: first line `n m`, then `m` lines `u v` meaning the arc `u -> v`,
//! written in canonical edge order. `#` starts a comment in either format.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, OrientedGraph, VertexSet};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap().trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("expected a non-negative integer, got {t:?}"),
        })
    });
    let a = it.next().ok_or_else(|| Error::Parse {
        line: line_no,
        msg: "expected two integers".into(),
    })??;
    let b = it.next().ok_or_else(|| Error::Parse {
        line: line_no,
        msg: "expected two integers".into(),
    })??;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: line_no,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n m`".into(),
    })?;
    let (n, m) = parse_pair(hl, header)?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = hl;
    for (ln, line) in lines {
        let (a, b) = parse_pair(ln, line)?;
        if a >= n || b >= n || a == b {
            return Err(Error::Parse {
                line: ln,
                msg: format!("invalid pair {a} {b} for n = {n}"),
            });
        }
        pairs.push((a, b));
        last_line = ln;
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header announces {m} edges but {} were given", pairs.len()),
        });
    }
    Ok((n, pairs))
}

pub fn parse_ug(text: &str) -> Result<Graph> {
    let (n, pairs) = parse_pairs(text)?;
    Graph::new(n, pairs).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })
}

pub fn parse_dg(text: &str) -> Result<OrientedGraph> {
    let (n, pairs) = parse_pairs(text)?;
    OrientedGraph::from_arcs(n, pairs).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })
}

pub fn write_ug(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn write_dg(d: &OrientedGraph) -> String {
    let mut s = format!("{} {}\n", d.n(), d.m());
    for (u, v) in d.arcs() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

fn dot_nodes(s: &mut String, n: usize, filled: Option<&VertexSet>) {
    for v in 0..n {
        match filled {
            Some(set) if set.contains(v) => {
                writeln!(s, "  {v} [label=\"{v}\", style=filled, fillcolor=black, fontcolor=white];")
                    .unwrap()
            }
            _ => writeln!(s, "  {v} [label=\"{v}\"];").unwrap(),
        }
    }
}

pub fn graph_to_dot(g: &Graph, filled: Option<&VertexSet>) -> String {
    let mut s = String::from("graph G {\n");
    dot_nodes(&mut s, g.n(), filled);
    for &(u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn oriented_to_dot(d: &OrientedGraph, filled: Option<&VertexSet>) -> String {
    let mut s = String::from("digraph D {\n");
    dot_nodes(&mut s, d.n(), filled);
    for (u, v) in d.arcs() {
        writeln!(s, "  {u} -> {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// A graph file read from disk, by extension.
#[derive(Clone, Debug)]
pub enum GraphFile {
    Undirected(Graph),
    Oriented(OrientedGraph),
}

impl GraphFile {
    pub fn graph(&self) -> &Graph {
        match self {
            GraphFile::Undirected(g) => g,
            GraphFile::Oriented(d) => d.graph(),
        }
    }
}

/// Reads `.ug` or `.dg` by file extension.
pub fn read_graph_file(path: &Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("ug") => Ok(GraphFile::Undirected(parse_ug(&text)?)),
        Some("dg") => Ok(GraphFile::Oriented(parse_dg(&text)?)),
        _ => Err(Error::Parameter(format!(
            "{}: expected a .ug or .dg file",
            path.display()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ug_round_trip_and_comments() {
        let text = "# a path\n3 2\n0 1 # first\n\n1 2\n";
        let g = parse_ug(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(write_ug(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(parse_ug(&write_ug(&g)).unwrap(), g);
    }

    #[test]
    fn dg_writes_arcs_in_edge_order() {
        let d = parse_dg("3 2\n2 1\n0 1\n").unwrap();
        assert_eq!(write_dg(&d), "3 2\n0 1\n2 1\n");
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_ug("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_ug("3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_dg("2 2\n0 1\n1 0\n").is_err());
        assert!(parse_ug("2 1\n0 2\n").is_err());
    }

    #[test]
    fn dot_marks_filled_vertices() {
        let d = parse_dg("2 1\n1 0\n").unwrap();
        let dot = oriented_to_dot(&d, Some(&[1].into_iter().collect()));
        assert!(dot.contains("1 -> 0;"));
        assert!(dot.contains("1 [label=\"1\", style=filled"));
        let g = parse_ug("2 1\n0 1\n").unwrap();
        assert!(graph_to_dot(&g, None).contains("0 -- 1;"));
    }
}
