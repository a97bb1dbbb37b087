//! Plain-text edge lists: a `# n=<n>` header, then one `u v w` line per edge.
//! `#` starts a comment anywhere on a line.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{VertexId, WeightedGraph};
use crate::cost::Weight;
use crate::error::{Error, Result};

/// How repeated vertex pairs in an input file are treated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParallelEdges {
    /// Keep the lightest copy; the resulting graph is simple.
    #[default]
    KeepMinimum,
    Reject,
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<WeightedGraph> {
    load_graph_with(path, ParallelEdges::KeepMinimum)
}

pub fn load_graph_with(path: impl AsRef<Path>, parallel: ParallelEdges) -> Result<WeightedGraph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_edge_list(&text, parallel).map_err(|e| match e {
        Error::Parse { line, msg, .. } => Error::Parse {
            path: path.to_path_buf(),
            line,
            msg,
        },
        other => other,
    })
}

pub fn parse_edge_list(text: &str, parallel: ParallelEdges) -> Result<WeightedGraph> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(VertexId, VertexId, Weight)> = Vec::new();
    let parse_err = |line: usize, msg: String| Error::Parse {
        path: "<input>".into(),
        line,
        msg,
    };
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let (content, comment) = match raw.find('#') {
            Some(pos) => (&raw[..pos], Some(&raw[pos + 1..])),
            None => (raw, None),
        };
        if let Some(value) = comment.and_then(|c| c.trim().strip_prefix("n=")) {
            if content.trim().is_empty() && declared_n.is_none() {
                let n = value
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("bad vertex count {value:?}")))?;
                declared_n = Some(n);
            }
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [a, b, w] => {
                let num = |s: &str, what: &str| -> Result<u64> {
                    s.parse::<u64>()
                        .map_err(|_| parse_err(lineno, format!("bad {what} {s:?}")))
                };
                let a = num(a, "endpoint")? as VertexId;
                let b = num(b, "endpoint")? as VertexId;
                let w = if w.starts_with('-') {
                    return Err(Error::NonPositiveWeight(a, b));
                } else {
                    num(w, "weight")?
                };
                edges.push((a, b, w));
            }
            _ => {
                return Err(parse_err(
                    lineno,
                    format!("expected `u v w`, found {} fields", fields.len()),
                ))
            }
        }
    }
    let n = match declared_n {
        Some(n) => n,
        None => edges.iter().map(|&(a, b, _)| a.max(b) + 1).max().unwrap_or(0),
    };
    WeightedGraph::build(n, edges, parallel)
}

/// Renders the edge-list text, with extra comment lines after the header.
pub fn write_edge_list(g: &WeightedGraph, comments: &[String]) -> String {
    let mut out = String::with_capacity(16 * (g.edge_count() + 2));
    let _ = writeln!(out, "# n={}", g.n());
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.w);
    }
    out
}

pub fn save_graph(g: &WeightedGraph, path: impl AsRef<Path>) -> Result<()> {
    save_graph_with_comments(g, path, &[])
}

pub fn save_graph_with_comments(
    g: &WeightedGraph,
    path: impl AsRef<Path>,
    comments: &[String],
) -> Result<()> {
    fs::write(path, write_edge_list(g, comments))?;
    Ok(())
}
