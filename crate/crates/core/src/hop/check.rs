use serde::{Deserialize, Serialize};

use crate::cost::{within_stretch, Cost, Stretch};
use crate::error::{Error, Result};
use crate::graph::{Subgraph, VertexId, WeightedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopCheck {
    pub ok: bool,
    /// First edge of `G` (in edge order) without a short, cheap path in `H`.
    pub counterexample: Option<(VertexId, VertexId)>,
}

/// True when every edge `uv` of `g` has an `h`-path of at most `b` edges and cost
/// at most `s·ω(uv)`.
pub fn is_b_hop_spanner(g: &WeightedGraph, h: &Subgraph, b: usize, s: Stretch) -> Result<HopCheck> {
    let hg = h.to_graph();
    if h.n() != g.n() || !hg.is_subgraph_of(g) {
        return Err(Error::NotSubgraph);
    }
    let mut cur = vec![Cost::Infinite; g.n()];
    let mut next = cur.clone();
    let mut source = usize::MAX;
    for e in g.edges() {
        if e.u != source {
            source = e.u;
            bounded_bellman_ford(&hg, source, b, &mut cur, &mut next);
        }
        if !within_stretch(cur[e.v], Cost::Finite(e.w), s, Cost::ZERO) {
            return Ok(HopCheck {
                ok: false,
                counterexample: Some((e.u, e.v)),
            });
        }
    }
    Ok(HopCheck {
        ok: true,
        counterexample: None,
    })
}

/// Exact cheapest cost from `src` using at most `rounds` edges, left in `cur`.
fn bounded_bellman_ford(
    g: &WeightedGraph,
    src: VertexId,
    rounds: usize,
    cur: &mut Vec<Cost>,
    next: &mut Vec<Cost>,
) {
    cur.fill(Cost::Infinite);
    cur[src] = Cost::ZERO;
    for _ in 0..rounds {
        next.copy_from_slice(cur);
        let mut changed = false;
        for e in g.edges() {
            for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                let via = cur[a] + e.w;
                if via < next[b] {
                    next[b] = via;
                    changed = true;
                }
            }
        }
        std::mem::swap(cur, next);
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testgraphs::cycle;
    use num_rational::Ratio;

    #[test]
    fn identity_passes() {
        let g = cycle(5, 2);
        let r = is_b_hop_spanner(&g, &Subgraph::full(&g), 1, Ratio::from_integer(1)).unwrap();
        assert!(r.ok);
    }

    #[test]
    fn long_cycle_missing_its_heavy_edge_needs_n_hops() {
        let n = 12;
        let mut edges: Vec<_> = (0..n).map(|i| (i, i + 1, 1)).collect();
        edges.push((0, n, 4));
        let g = WeightedGraph::from_edges(n + 1, edges).unwrap();
        let h = Subgraph::from_graph(&g, &g.filter_edges(|e| e.key() != (0, n))).unwrap();
        let s = Ratio::from_integer(3);
        assert_eq!(
            is_b_hop_spanner(&g, &h, 3, s).unwrap(),
            HopCheck {
                ok: false,
                counterexample: Some((0, n))
            }
        );
        assert!(is_b_hop_spanner(&g, &h, n, s).unwrap().ok);
    }

    #[test]
    fn hop_limit_beats_cheaper_long_paths() {
        // 0-3 weighs 10; the 3-hop route costs 3, the 2-hop route costs 12.
        let g = WeightedGraph::from_edges(
            5,
            [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 4, 6), (4, 3, 6), (0, 3, 10)],
        )
        .unwrap();
        let h = Subgraph::from_graph(&g, &g.filter_edges(|e| e.key() != (0, 3))).unwrap();
        assert!(!is_b_hop_spanner(&g, &h, 2, Ratio::from_integer(1)).unwrap().ok);
        assert!(is_b_hop_spanner(&g, &h, 2, Ratio::new(6, 5)).unwrap().ok);
        assert!(is_b_hop_spanner(&g, &h, 3, Ratio::from_integer(1)).unwrap().ok);
    }
}
