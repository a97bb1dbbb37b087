use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use mps_core::graph::ParallelEdges;
use mps_core::{load_graph_with, Error, Subgraph, WeightedGraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Guard errors map to 3, a spanner that is not a subgraph to 1, the rest to 2.
pub fn exit_code_for(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::GuardExceeded { .. }) => EXIT_GUARD,
        Some(Error::NotSubgraph) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

pub fn parallel_mode(strict: bool) -> ParallelEdges {
    if strict {
        ParallelEdges::Reject
    } else {
        ParallelEdges::KeepMinimum
    }
}

pub fn read_graph(path: &Path, strict: bool) -> Result<WeightedGraph> {
    Ok(load_graph_with(path, parallel_mode(strict))?)
}

/// Reads `h` and places it inside `g`; `h` may declare fewer vertices.
pub fn read_subgraph(g: &WeightedGraph, path: &Path, strict: bool) -> Result<Subgraph> {
    let hg = read_graph(path, strict)?;
    if hg.n() > g.n() {
        return Err(Error::NotSubgraph.into());
    }
    let pairs = hg.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>();
    for e in hg.edges() {
        if g.weight(e.u, e.v) != Some(e.w) {
            return Err(Error::NotSubgraph.into());
        }
    }
    Ok(Subgraph::from_pairs(g, pairs)?)
}

pub fn write(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

/// `dir/stem.ext` next to `path`, e.g. `h.el` -> `h.verify.csv`.
pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}{suffix}"))
}

/// `MPS_GUARD_N` raises or lowers the vertex limit of exhaustive checks.
pub fn guard_n(default: usize) -> Result<usize> {
    match std::env::var("MPS_GUARD_N") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("MPS_GUARD_N={v:?} is not a count")),
        Err(_) => Ok(default),
    }
}

pub fn print_json(value: &impl serde::Serialize) -> Result<String> {
    let text = serde_json::to_string_pretty(value)?;
    print_stdout(&format!("{text}\n"));
    Ok(text)
}

/// Writes to stdout, ignoring a closed pipe.
pub fn print_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}
