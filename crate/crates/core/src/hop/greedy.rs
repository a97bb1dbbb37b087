use std::collections::VecDeque;

use super::check_k;
use crate::error::Result;
use crate::graph::{Subgraph, VertexId, WeightedGraph};

/// Scans edges by weight and keeps `uv` only when `H` has no `u`-`v` path of at
/// most `2k - 1` edges. Equal weights are ordered by endpoint ids.
pub fn greedy_hop_spanner(g: &WeightedGraph, k: usize) -> Result<Subgraph> {
    check_k(k)?;
    let limit = 2 * k - 1;
    let mut order: Vec<_> = g.edges().to_vec();
    order.sort_by_key(|e| (e.w, e.u, e.v));
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); g.n()];
    let mut h = Subgraph::empty(g);
    let mut seen = vec![usize::MAX; g.n()];
    for (stamp, e) in order.iter().enumerate() {
        if !within_hops(&adj, e.u, e.v, limit, &mut seen, stamp) {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
            h.insert(g, e.u, e.v)?;
        }
    }
    Ok(h)
}

fn within_hops(
    adj: &[Vec<VertexId>],
    from: VertexId,
    to: VertexId,
    limit: usize,
    seen: &mut [usize],
    stamp: usize,
) -> bool {
    let mut queue = VecDeque::from([(from, 0)]);
    seen[from] = stamp;
    while let Some((x, d)) = queue.pop_front() {
        if d == limit {
            continue;
        }
        for &y in &adj[x] {
            if y == to {
                return true;
            }
            if seen[y] != stamp {
                seen[y] = stamp;
                queue.push_back((y, d + 1));
            }
        }
    }
    false
}
