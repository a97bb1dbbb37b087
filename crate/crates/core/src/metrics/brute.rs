//! Exhaustive oracles. Exponential by design; every entry point refuses graphs
//! with more than [`BRUTE_FORCE_MAX_N`] vertex slots.

use std::collections::HashMap;

use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};

pub const BRUTE_FORCE_MAX_N: usize = 12;

fn guard(g: &WeightedGraph) -> Result<()> {
    if g.n() > BRUTE_FORCE_MAX_N {
        return Err(Error::GuardExceeded {
            what: "brute-force vertex count",
            actual: g.n(),
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    Ok(())
}

fn endpoints(g: &WeightedGraph, u: VertexId, v: VertexId) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidParameter(format!(
            "endpoints must differ, got {u} twice"
        )));
    }
    Ok(())
}

struct SimplePath {
    cost: u64,
    interior: u32,
}

/// Every simple `u`-`v` path with at most `max_hops` edges.
fn simple_paths(g: &WeightedGraph, u: VertexId, v: VertexId, max_hops: usize) -> Vec<SimplePath> {
    fn walk(
        g: &WeightedGraph,
        x: VertexId,
        v: VertexId,
        hops_left: usize,
        visited: u32,
        cost: u64,
        out: &mut Vec<SimplePath>,
    ) {
        if hops_left == 0 {
            return;
        }
        for &(y, w) in g.adjacent(x) {
            if y == v {
                out.push(SimplePath {
                    cost: cost + w,
                    interior: visited,
                });
            } else if visited & (1 << y) == 0 {
                walk(g, y, v, hops_left - 1, visited | (1 << y), cost + w, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(g, u, v, max_hops, 1 << u, 0, &mut out);
    for p in &mut out {
        p.interior &= !(1 << u);
    }
    out
}

/// δᵖ(u, v) by enumerating tuples of internally disjoint simple paths.
pub fn multipath_cost_bruteforce(g: &WeightedGraph, p: usize, u: VertexId, v: VertexId) -> Result<Cost> {
    guard(g)?;
    endpoints(g, u, v)?;
    if p < 1 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let mut paths = simple_paths(g, u, v, g.n());
    paths.sort_by_key(|p| p.cost);

    fn search(paths: &[SimplePath], start: usize, left: usize, cost: u64, used: u32, best: &mut Option<u64>) {
        if left == 0 {
            if best.is_none_or(|b| cost < b) {
                *best = Some(cost);
            }
            return;
        }
        for i in start..paths.len() {
            let lower = cost + paths[i].cost * left as u64;
            if best.is_some_and(|b| lower >= b) {
                break;
            }
            if paths[i].interior & used == 0 {
                search(
                    paths,
                    i + 1,
                    left - 1,
                    cost + paths[i].cost,
                    used | paths[i].interior,
                    best,
                );
            }
        }
    }
    let mut best = None;
    search(&paths, 0, p, 0, 0, &mut best);
    Ok(best.map_or(Cost::Infinite, Cost::Finite))
}

/// Maximum number of internally disjoint `u`-`v` paths with at most `s` edges.
pub fn mu_s(g: &WeightedGraph, u: VertexId, v: VertexId, s: usize) -> Result<usize> {
    guard(g)?;
    endpoints(g, u, v)?;
    let paths = simple_paths(g, u, v, s);
    let direct = paths.iter().any(|p| p.interior == 0) as usize;
    let masks: Vec<u32> = paths.iter().map(|p| p.interior).filter(|&m| m != 0).collect();

    fn pack(used: u32, masks: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if let Some(&c) = memo.get(&used) {
            return c;
        }
        let best = masks
            .iter()
            .filter(|&&m| m & used == 0)
            .map(|&m| 1 + pack(used | m, masks, memo))
            .max()
            .unwrap_or(0);
        memo.insert(used, best);
        best
    }
    Ok(direct + pack(0, &masks, &mut HashMap::new()))
}

/// Minimum number of vertices (other than `u`, `v`) whose removal destroys every
/// `u`-`v` path of at most `s` edges. The endpoints must not be adjacent.
pub fn kappa_s(g: &WeightedGraph, u: VertexId, v: VertexId, s: usize) -> Result<usize> {
    guard(g)?;
    endpoints(g, u, v)?;
    if g.has_edge(u, v) {
        return Err(Error::InvalidParameter(format!(
            "kappa_s needs non-adjacent endpoints, {u} and {v} share an edge"
        )));
    }
    let paths = simple_paths(g, u, v, s);
    let others: Vec<VertexId> = g.vertices().filter(|&x| x != u && x != v).collect();
    let hits_all = |cut: u32| paths.iter().all(|p| p.interior & cut != 0);
    for size in 0..=others.len() {
        let mut found = false;
        for_each_subset(&others, size, &mut |cut| {
            found = found || hits_all(cut);
        });
        if found {
            return Ok(size);
        }
    }
    unreachable!("removing every other vertex destroys all paths")
}

fn for_each_subset(items: &[VertexId], size: usize, f: &mut impl FnMut(u32)) {
    fn rec(items: &[VertexId], size: usize, from: usize, mask: u32, f: &mut impl FnMut(u32)) {
        if size == 0 {
            f(mask);
            return;
        }
        for i in from..=items.len().saturating_sub(size) {
            rec(items, size - 1, i + 1, mask | (1 << items[i]), f);
        }
    }
    rec(items, size, 0, 0, f);
}
