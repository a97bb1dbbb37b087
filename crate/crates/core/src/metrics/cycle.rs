use std::collections::BTreeSet;

use super::dijkstra;
use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::flow::MinCostFlow;
use crate::graph::{edge_key, VertexId, WeightedGraph};

fn root_weight(g: &WeightedGraph, a: VertexId, b: VertexId) -> Result<u64> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    g.weight(a, b).ok_or(Error::NotAnEdge(a, b))
}

/// Minimum cost of a cycle through edge `ab` and vertex `w`; for `w` in
/// `{a, b}` the cheapest cycle through `ab`.
pub fn cycle_cost_through_edge(g: &WeightedGraph, (a, b): (VertexId, VertexId), w: VertexId) -> Result<Cost> {
    root_weight(g, a, b)?;
    g.check_vertex(w)?;
    Ok(edge_cycle_costs(g, a, b, Cost::Infinite, Some(&[w]))[w])
}

/// `{w : δ²(ab, w) ≤ r}`.
pub fn two_ball(g: &WeightedGraph, (a, b): (VertexId, VertexId), r: Cost) -> Result<BTreeSet<VertexId>> {
    root_weight(g, a, b)?;
    let all: Vec<VertexId> = g.vertices().collect();
    Ok(two_ball_members(g, a, b, r, &all, None).into_iter().collect())
}

/// Members of the 2-ball of radius `r` among `targets`, in target order.
/// With `stop_after = Some(t)` the scan ends as soon as `t` members are found.
pub(crate) fn two_ball_members(
    g: &WeightedGraph,
    a: VertexId,
    b: VertexId,
    r: Cost,
    targets: &[VertexId],
    stop_after: Option<usize>,
) -> Vec<VertexId> {
    let mut found = Vec::new();
    let mut probe = EdgeCycleProbe::new(g, a, b, r);
    for &w in targets {
        let c = probe.cost(w);
        if c.is_finite() && c <= r {
            found.push(w);
            if stop_after == Some(found.len()) {
                break;
            }
        }
    }
    found
}

/// δ²(ab, w) for every vertex (or only `targets`), exact whenever the value is
/// at most `radius`; larger values may be reported as `Infinite`.
pub(crate) fn edge_cycle_costs(
    g: &WeightedGraph,
    a: VertexId,
    b: VertexId,
    radius: Cost,
    targets: Option<&[VertexId]>,
) -> Vec<Cost> {
    let mut out = vec![Cost::Infinite; g.n()];
    let mut probe = EdgeCycleProbe::new(g, a, b, radius);
    match targets {
        Some(ts) => ts.iter().for_each(|&w| out[w] = probe.cost(w)),
        None => (0..g.n()).for_each(|w| out[w] = probe.cost(w)),
    }
    out
}

/// Reusable flow network for cycles through a fixed edge `ab`.
///
/// Only vertices `x` with `ω(ab) + d(a,x) + d(b,x) ≤ radius` (distances in
/// `g - ab`) can lie on a cycle of cost at most `radius` through `ab`, so the
/// network is restricted to them.
struct EdgeCycleProbe {
    a: VertexId,
    b: VertexId,
    base: Cost,
    local: Vec<Option<usize>>,
    net: Option<MinCostFlow>,
    sink: usize,
    weight: u64,
}

impl EdgeCycleProbe {
    fn new(g: &WeightedGraph, a: VertexId, b: VertexId, radius: Cost) -> Self {
        let weight = g.weight(a, b).expect("root must be an edge");
        let skip = Some(edge_key(a, b));
        let da = dijkstra(g, a, skip);
        let db = dijkstra(g, b, skip);
        let base = da[b] + weight;
        let mut local = vec![None; g.n()];
        let mut count = 0;
        if base.is_finite() && base <= radius {
            for x in g.vertices() {
                let bound = da[x] + db[x] + weight;
                if bound.is_finite() && bound <= radius {
                    local[x] = Some(count);
                    count += 1;
                }
            }
        }
        let sink = 2 * count;
        let net = (count > 0).then(|| {
            let mut net = MinCostFlow::new(sink + 1);
            for x in g.vertices() {
                let Some(i) = local[x] else { continue };
                if x == a || x == b {
                    net.add_arc(2 * i, sink, 1, 0);
                } else {
                    net.add_arc(2 * i, 2 * i + 1, 1, 0);
                }
                for &(y, w) in g.adjacent(x) {
                    let Some(j) = local[y] else { continue };
                    if x == a || x == b {
                        continue;
                    }
                    net.add_arc(2 * i + 1, 2 * j, 1, w as i64);
                }
            }
            net
        });
        Self {
            a,
            b,
            base,
            local,
            net,
            sink,
            weight,
        }
    }

    fn cost(&mut self, w: VertexId) -> Cost {
        if w == self.a || w == self.b {
            return self.base;
        }
        let (Some(i), Some(net)) = (self.local.get(w).copied().flatten(), self.net.as_mut()) else {
            return Cost::Infinite;
        };
        net.reset();
        let (units, cost) = net.run(2 * i + 1, self.sink, 2);
        if units == 2 {
            Cost::Finite(cost as u64 + self.weight)
        } else {
            Cost::Infinite
        }
    }
}
