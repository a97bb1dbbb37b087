//! Shortest 2-path spanning trees: a small subgraph of the bicomponent of a
//! root edge `uv` in which every vertex `w` lies on a cheapest cycle through
//! `uv` and `w`.

use std::collections::{BTreeMap, BTreeSet};

use super::suurballe::{cheapest_pair_by, Digraph};
use crate::cost::{Cost, Weight};
use crate::error::{Error, Result};
use crate::graph::{bicomponent_of, edge_key, Bicomponent, Subgraph, VertexId, WeightedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spst2 {
    pub root: (VertexId, VertexId),
    pub root_weight: Weight,
    /// Vertices of the bicomponent containing the root.
    pub vertices: BTreeSet<VertexId>,
    pub tree: Subgraph,
    /// Cheapest cycle cost through the root and each vertex, inside `tree`.
    pub costs: BTreeMap<VertexId, Cost>,
}

impl Spst2 {
    /// Number of vertices of the root's bicomponent.
    pub fn nu(&self) -> usize {
        self.vertices.len()
    }
}

/// Builds the structure by splitting the root into `u - w - v` (weights doubled
/// so the halves stay integral), splitting every vertex `a` into `a1 -> a2`,
/// and routing a cheapest pair of arc-disjoint dipaths from `w2` to each `x1`.
///
/// Destinations are served in order of cycle cost; each one takes, among its
/// cheapest pairs, one that adds the fewest arcs not already in the structure.
pub fn spst2(g: &WeightedGraph, (a, b): (VertexId, VertexId)) -> Result<Spst2> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let root_weight = g.weight(a, b).ok_or(Error::NotAnEdge(a, b))?;
    let (vertices, edges) = match bicomponent_of(g, a, b)? {
        Bicomponent::CutEdge => return Err(Error::CutEdge(a.min(b), a.max(b))),
        Bicomponent::Block { vertices, edges } => (vertices, edges),
    };
    let ids: Vec<VertexId> = vertices.iter().copied().collect();
    let local: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let w = ids.len();
    let inn = |i: usize| 2 * i;
    let out = |i: usize| 2 * i + 1;

    let mut d = Digraph::new(2 * (w + 1));
    let mut edge_of: Vec<Option<(VertexId, VertexId)>> = Vec::new();
    let mut push = |d: &mut Digraph, from, to, cost, edge| {
        d.add_arc(from, to, cost);
        edge_of.push(edge);
    };
    for i in 0..=w {
        push(&mut d, inn(i), out(i), 0, None);
    }
    let root = edge_key(a, b);
    for (x, y) in edges.pairs() {
        if (x, y) == root {
            continue;
        }
        let c = 2 * g.weight(x, y).expect("block edge");
        push(&mut d, out(local[&x]), inn(local[&y]), c, Some((x, y)));
        push(&mut d, out(local[&y]), inn(local[&x]), c, Some((x, y)));
    }
    for end in [a, b] {
        push(&mut d, out(w), inn(local[&end]), root_weight, Some(root));
        push(&mut d, out(local[&end]), inn(w), root_weight, None);
    }

    let arc_count = d.arcs().len() as i64;
    let base: Vec<i64> = d.arcs().iter().map(|arc| arc.2 as i64).collect();
    let mut pair_cost = Vec::with_capacity(w);
    for (i, &x) in ids.iter().enumerate() {
        let (c, _) = cheapest_pair_by(&d, out(w), inn(i), |k| base[k])
            .ok_or_else(|| Error::InvalidParameter(format!("vertex {x} has no cycle through the root")))?;
        pair_cost.push((c, x, i));
    }
    pair_cost.sort();

    let scale = arc_count + 1;
    let mut used = vec![false; d.arcs().len()];
    for &(_, _, i) in &pair_cost {
        let (_, arcs) = cheapest_pair_by(&d, out(w), inn(i), |k| base[k] * scale + i64::from(!used[k]))
            .expect("pair exists under any positive reweighting");
        for k in arcs {
            used[k] = true;
        }
    }

    let mut tree = Subgraph::empty(g);
    for (k, &u) in used.iter().enumerate() {
        if let (true, Some((x, y))) = (u, edge_of[k]) {
            tree.insert(g, x, y)?;
        }
    }
    let costs = pair_cost
        .iter()
        .map(|&(c, x, _)| (x, Cost::Finite(c as u64 / 2)))
        .collect();
    Ok(Spst2 {
        root: (a, b),
        root_weight,
        vertices,
        tree,
        costs,
    })
}
