//! Exact graph metrics: distances, p-multipath costs, edge-rooted cycle costs,
//! hop balls, and brute-force oracles for small instances.

mod brute;
mod cycle;
mod multipath;
mod stretch;

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, VecDeque};

use crate::cost::Cost;
use crate::error::Result;
use crate::graph::{VertexId, WeightedGraph};

pub use brute::{kappa_s, mu_s, multipath_cost_bruteforce, BRUTE_FORCE_MAX_N};
pub use cycle::{cycle_cost_through_edge, two_ball};
pub use multipath::{multipath_cost, PathSet};
pub use stretch::{verify_stretch, PairRow, StretchReport, StretchValue};

pub(crate) use cycle::two_ball_members;
pub(crate) use multipath::multipath_cost_value;

pub fn shortest_path_cost(g: &WeightedGraph, u: VertexId, v: VertexId) -> Result<Cost> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(dijkstra(g, u, None)[v])
}

/// Single-source distances, optionally ignoring one edge (given as a normalized key).
pub(crate) fn dijkstra(g: &WeightedGraph, src: VertexId, skip: Option<(VertexId, VertexId)>) -> Vec<Cost> {
    let mut dist = vec![Cost::Infinite; g.n()];
    if !g.is_present(src) {
        return dist;
    }
    let mut heap = BinaryHeap::new();
    dist[src] = Cost::ZERO;
    heap.push(Reverse((0u64, src)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if Cost::Finite(d) > dist[x] {
            continue;
        }
        for &(y, w) in g.adjacent(x) {
            if skip == Some(crate::graph::edge_key(x, y)) {
                continue;
            }
            let nd = d.saturating_add(w);
            if Cost::Finite(nd) < dist[y] {
                dist[y] = Cost::Finite(nd);
                heap.push(Reverse((nd, y)));
            }
        }
    }
    dist
}

/// Hop distances from `src`, explored no further than `limit` hops.
pub(crate) fn hop_distances(g: &WeightedGraph, src: VertexId, limit: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    if !g.is_present(src) {
        return dist;
    }
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].unwrap_or(0);
        if d == limit {
            continue;
        }
        for &(y, _) in g.adjacent(x) {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Vertices within `r` hops of `u`. Weights are ignored.
pub fn hop_ball(g: &WeightedGraph, u: VertexId, r: usize) -> Result<BTreeSet<VertexId>> {
    g.check_vertex(u)?;
    Ok(hop_distances(g, u, r)
        .into_iter()
        .enumerate()
        .filter_map(|(x, d)| d.map(|_| x))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testgraphs::{cycle, star};

    #[test]
    fn shortest_path_examples() {
        let c4 = cycle(4, 1);
        assert_eq!(shortest_path_cost(&c4, 2, 2).unwrap(), Cost::ZERO);
        assert_eq!(shortest_path_cost(&c4, 0, 2).unwrap(), Cost::Finite(2));
        let two = WeightedGraph::from_edges(4, [(0, 1, 3), (2, 3, 4)]).unwrap();
        assert_eq!(shortest_path_cost(&two, 0, 3).unwrap(), Cost::Infinite);
        assert!(shortest_path_cost(&two, 0, 9).is_err());
    }

    #[test]
    fn hop_ball_examples() {
        let c6 = cycle(6, 5);
        assert_eq!(hop_ball(&c6, 3, 0).unwrap(), BTreeSet::from([3]));
        assert_eq!(hop_ball(&c6, 0, 2).unwrap().len(), 5);
        let s = star(5);
        assert_eq!(hop_ball(&s, 0, 1).unwrap().len(), 6);
        assert!(hop_ball(&s, 7, 1).is_err());
    }
}
