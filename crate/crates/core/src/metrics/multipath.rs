use serde::{Deserialize, Serialize};

use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::flow::MinCostFlow;
use crate::graph::{VertexId, WeightedGraph};

/// `p` internally vertex-disjoint `u`-`v` paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSet {
    pub u: VertexId,
    pub v: VertexId,
    pub paths: Vec<Vec<VertexId>>,
    pub total_cost: Cost,
}

impl PathSet {
    /// Checks the witness against `g`: simple `u`-`v` paths, pairwise
    /// internally disjoint, and a total matching the sum of their edge weights.
    pub fn check(&self, g: &WeightedGraph) -> std::result::Result<(), String> {
        let mut seen = vec![false; g.n()];
        let mut total = 0u64;
        for path in &self.paths {
            if path.first() != Some(&self.u) || path.last() != Some(&self.v) {
                return Err(format!("path {path:?} does not join {} and {}", self.u, self.v));
            }
            for &x in &path[1..path.len() - 1] {
                if x == self.u || x == self.v || x >= g.n() || seen[x] {
                    return Err(format!("vertex {x} repeated or shared in {path:?}"));
                }
                seen[x] = true;
            }
            for pair in path.windows(2) {
                let w = g
                    .weight(pair[0], pair[1])
                    .ok_or_else(|| format!("{}-{} is not an edge", pair[0], pair[1]))?;
                total += w;
            }
        }
        let direct = self.paths.iter().filter(|p| p.len() == 2).count();
        if direct > 1 {
            return Err("edge uv used twice".into());
        }
        if Cost::Finite(total) != self.total_cost {
            return Err(format!("total {total} differs from {}", self.total_cost));
        }
        Ok(())
    }
}

fn validate(g: &WeightedGraph, p: usize, u: VertexId, v: VertexId) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if p < 1 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    if u == v {
        return Err(Error::InvalidParameter(format!(
            "multipath endpoints must differ, got {u} twice"
        )));
    }
    Ok(())
}

/// Vertex-split network: `in(x) = 2x`, `out(x) = 2x + 1`, source `out(u)`, sink `in(v)`.
fn split_network(g: &WeightedGraph, u: VertexId, v: VertexId) -> MinCostFlow {
    let mut net = MinCostFlow::new(2 * g.n());
    for x in g.vertices() {
        if x != u && x != v {
            net.add_arc(2 * x, 2 * x + 1, 1, 0);
        }
    }
    for e in g.edges() {
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            if b != u && a != v {
                net.add_arc(2 * a + 1, 2 * b, 1, e.w as i64);
            }
        }
    }
    net
}

pub(crate) fn multipath_cost_value(g: &WeightedGraph, p: usize, u: VertexId, v: VertexId) -> Cost {
    if !g.is_present(u) || !g.is_present(v) {
        return Cost::Infinite;
    }
    let mut net = split_network(g, u, v);
    let (units, cost) = net.run(2 * u + 1, 2 * v, p as i64);
    if units == p as i64 {
        Cost::Finite(cost as u64)
    } else {
        Cost::Infinite
    }
}

/// Minimum total weight of `p` internally vertex-disjoint `u`-`v` paths, with
/// a witness when finite.
pub fn multipath_cost(
    g: &WeightedGraph,
    p: usize,
    u: VertexId,
    v: VertexId,
) -> Result<(Cost, Option<PathSet>)> {
    validate(g, p, u, v)?;
    if !g.is_present(u) || !g.is_present(v) {
        return Ok((Cost::Infinite, None));
    }
    let mut net = split_network(g, u, v);
    let (units, cost) = net.run(2 * u + 1, 2 * v, p as i64);
    if units < p as i64 {
        return Ok((Cost::Infinite, None));
    }
    let mut succ: Vec<Vec<VertexId>> = vec![Vec::new(); g.n()];
    for k in 0..net.arc_count() {
        let (a, b) = net.arc(k);
        if a % 2 == 1 && b % 2 == 0 && net.flow_on(k) > 0 {
            succ[a / 2].push(b / 2);
        }
    }
    for s in &mut succ {
        s.sort_unstable();
        s.reverse();
    }
    let mut paths = Vec::with_capacity(p);
    for _ in 0..p {
        let mut path = vec![u];
        let mut x = u;
        while x != v {
            x = succ[x].pop().expect("flow conservation");
            path.push(x);
        }
        paths.push(path);
    }
    let total_cost = Cost::Finite(cost as u64);
    Ok((
        total_cost,
        Some(PathSet {
            u,
            v,
            paths,
            total_cost,
        }),
    ))
}
