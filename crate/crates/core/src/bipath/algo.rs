use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::spst2;
use crate::cost::Cost;
use crate::error::Result;
use crate::graph::{Subgraph, VertexId, WeightedGraph};
use crate::metrics::two_ball_members;

/// Graph the shortest 2-path spanning tree is computed on in each iteration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpstSource {
    /// The working graph of the current iteration.
    #[default]
    Current,
    /// The untouched input graph.
    Frozen,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipathIteration {
    pub edge: (VertexId, VertexId),
    pub ball_size: usize,
    pub removed: Vec<VertexId>,
    pub edges_added: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipathTrace {
    pub spst_source: SpstSource,
    pub iterations: Vec<BipathIteration>,
    pub residual_edges: usize,
}

impl BipathTrace {
    /// One JSON object per iteration.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for it in &self.iterations {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string(it).expect("plain data serializes")
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipathOutput {
    pub h: Subgraph,
    pub trace: BipathTrace,
    /// Working graph left when no edge qualifies any more.
    pub residual: WeightedGraph,
}

/// Smallest `t` with `t² > n`.
fn threshold(n: usize) -> usize {
    let mut t = (n as f64).sqrt() as usize;
    while t * t <= n {
        t += 1;
    }
    while t > 0 && (t - 1) * (t - 1) > n {
        t -= 1;
    }
    t
}

/// Edges of a breadth-first tree of depth 2 rooted at `root`.
fn bfs2_edges(g: &WeightedGraph, root: VertexId) -> Vec<(VertexId, VertexId)> {
    let mut depth = vec![usize::MAX; g.n()];
    let mut edges = Vec::new();
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        if depth[x] == 2 {
            continue;
        }
        for &(y, _) in g.adjacent(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                edges.push((x, y));
                queue.push_back(y);
            }
        }
    }
    edges
}

pub fn bipath_spanner(g: &WeightedGraph) -> Result<(Subgraph, BipathTrace)> {
    bipath_spanner_with(g, SpstSource::Current).map(|o| (o.h, o.trace))
}

/// Repeatedly picks an edge `uv` whose 2-ball of radius `4W` holds more than
/// `√n` neighbors of `u` or `v`, keeps a shortest 2-path spanning tree of `uv`
/// and depth-2 BFS trees at `u` and `v`, and deletes those neighbors. What is
/// left at the end is kept whole.
pub fn bipath_spanner_with(g: &WeightedGraph, source: SpstSource) -> Result<BipathOutput> {
    let radius = Cost::Finite(4 * g.max_weight());
    let need = threshold(g.present_count());
    let mut current = g.clone();
    let mut h = Subgraph::empty(g);
    let mut trace = BipathTrace {
        spst_source: source,
        ..BipathTrace::default()
    };
    let order: Vec<(VertexId, VertexId)> = g.edges().iter().map(|e| e.key()).collect();
    let mut cursor = 0;
    while cursor < order.len() {
        let (u, v) = order[cursor];
        if !current.has_edge(u, v) {
            cursor += 1;
            continue;
        }
        let targets: Vec<VertexId> = current
            .neighbors(u)?
            .union(&current.neighbors(v)?)
            .copied()
            .collect();
        if two_ball_members(&current, u, v, radius, &targets, Some(need)).len() < need {
            cursor += 1;
            continue;
        }
        let removed = two_ball_members(&current, u, v, radius, &targets, None);
        let before = h.edge_count();
        let spst = match source {
            SpstSource::Current => spst2(&current, (u, v))?,
            SpstSource::Frozen => spst2(g, (u, v))?,
        };
        h.union_with(&spst.tree);
        for root in [u, v] {
            for (x, y) in bfs2_edges(&current, root) {
                h.insert(g, x, y)?;
            }
        }
        trace.iterations.push(BipathIteration {
            edge: (u, v),
            ball_size: removed.len(),
            removed: removed.clone(),
            edges_added: h.edge_count() - before,
        });
        current = current.remove_vertices(&removed.into_iter().collect::<BTreeSet<_>>())?;
    }
    for e in current.edges() {
        h.insert(g, e.u, e.v)?;
    }
    trace.residual_edges = current.edge_count();
    Ok(BipathOutput {
        h,
        trace,
        residual: current,
    })
}
