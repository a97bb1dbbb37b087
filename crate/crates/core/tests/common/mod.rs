#![allow(dead_code)]

use mps_core::{gen_random, gen_random_biconnected, RandomGraphSpec, VertexId, WeightedGraph};
use proptest::prelude::*;
use std::collections::VecDeque;

pub fn random(n: usize, edge_prob: f64, wmax: u64, seed: u64) -> WeightedGraph {
    gen_random(&RandomGraphSpec {
        n,
        edge_prob,
        weight_range: (1, wmax),
        seed,
    })
    .unwrap()
}

pub fn biconnected(n: usize, edge_prob: f64, wmax: u64, seed: u64) -> WeightedGraph {
    gen_random_biconnected(&RandomGraphSpec {
        n,
        edge_prob,
        weight_range: (1, wmax),
        seed,
    })
    .unwrap()
}

/// Small random graphs: up to `max_n` vertices, density and weights drawn too.
pub fn small_graph(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_n, 0.15f64..0.9, 1u64..12, any::<u64>()).prop_map(|(n, p, w, seed)| random(n, p, w, seed))
}

/// Length of a shortest cycle (hop count), by a BFS from every vertex.
pub fn girth(g: &WeightedGraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for root in g.vertices() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in g.adjacent(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Cheapest simple `u`-`v` path in `g - uv` through `w`, plus `ω(uv)`, by DFS.
pub fn cycle_through_bruteforce(g: &WeightedGraph, u: VertexId, v: VertexId, w: VertexId) -> Option<u64> {
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &WeightedGraph,
        x: VertexId,
        target: VertexId,
        must: VertexId,
        root: (VertexId, VertexId),
        seen: &mut Vec<bool>,
        cost: u64,
        best: &mut Option<u64>,
    ) {
        if x == target {
            if seen[must] {
                *best = Some(best.map_or(cost, |b| b.min(cost)));
            }
            return;
        }
        for &(y, wt) in g.adjacent(x) {
            if (x.min(y), x.max(y)) == root || seen[y] {
                continue;
            }
            seen[y] = true;
            dfs(g, y, target, must, root, seen, cost + wt, best);
            seen[y] = false;
        }
    }
    let omega = g.weight(u, v)?;
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    let mut best = None;
    dfs(g, u, v, w, (u.min(v), u.max(v)), &mut seen, 0, &mut best);
    best.map(|c| c + omega)
}
