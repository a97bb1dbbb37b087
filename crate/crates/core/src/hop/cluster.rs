//! Randomized clustering in the style of Baswana and Sen, with levels drawn up
//! front so that a node's randomness depends only on `(seed, id)`.
//!
//! Phase `i` (for `i = 1..k-1`) keeps the clusters whose center has level at
//! least `i`. A vertex of a dropped cluster either joins an adjacent kept
//! cluster through its lightest edge into one, or leaves the clustering after
//! keeping one lightest edge per adjacent cluster. A final phase connects every
//! vertex to each adjacent cluster. Residual edges are compared by
//! `(weight, neighbor id)` throughout.

use std::collections::BTreeMap;

use rand::Rng;

use super::check_k;
use crate::cost::Weight;
use crate::error::{Error, Result};
use crate::graph::{Subgraph, VertexId, WeightedGraph};
use crate::seed::rng_for;

const LEVEL_TAG: u64 = 0x006c_6576_656c;

/// `min(1, (c ln n / n)^(1/k))`.
pub fn sampling_probability(n: usize, k: usize, c: f64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let n = n as f64;
    ((c * n.ln()) / n).powf(1.0 / k as f64).min(1.0)
}

/// Level of vertex `v`: promoted from 0 while a fresh draw falls below `q`, capped at `k - 1`.
pub fn sample_level(seed: u64, v: VertexId, k: usize, q: f64) -> usize {
    let mut rng = rng_for(seed, &[LEVEL_TAG, v as u64]);
    let mut level = 0;
    while level + 1 < k && rng.gen::<f64>() < q {
        level += 1;
    }
    level
}

/// One residual edge as seen from its owner during a phase.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ResidualEdge {
    pub neighbor: VertexId,
    pub weight: Weight,
    pub center: VertexId,
    pub kept: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct PhaseDecision {
    /// New cluster center, `None` when the vertex leaves the clustering.
    pub join: Option<VertexId>,
    pub add: Vec<VertexId>,
    pub drop: Vec<VertexId>,
}

fn lightest_per_cluster(edges: &[ResidualEdge]) -> BTreeMap<VertexId, (Weight, VertexId, bool)> {
    let mut best: BTreeMap<VertexId, (Weight, VertexId, bool)> = BTreeMap::new();
    for e in edges {
        let cand = (e.weight, e.neighbor, e.kept);
        best.entry(e.center)
            .and_modify(|b| {
                if (cand.0, cand.1) < (b.0, b.1) {
                    *b = cand;
                }
            })
            .or_insert(cand);
    }
    best
}

/// Decision of a vertex whose cluster was not kept in this phase.
pub(crate) fn decide_phase(edges: &[ResidualEdge]) -> PhaseDecision {
    let best = lightest_per_cluster(edges);
    let target = best
        .iter()
        .filter(|(_, b)| b.2)
        .min_by_key(|(_, b)| (b.0, b.1))
        .map(|(&c, &b)| (c, (b.0, b.1)));
    let mut out = PhaseDecision::default();
    let mut dropped_clusters = Vec::new();
    match target {
        None => {
            out.add = best.values().map(|b| b.1).collect();
            out.drop = edges.iter().map(|e| e.neighbor).collect();
            return finish(out);
        }
        Some((center, key)) => {
            out.join = Some(center);
            out.add.push(key.1);
            dropped_clusters.push(center);
            for (&c, b) in &best {
                if c != center && (b.0, b.1) < key {
                    out.add.push(b.1);
                    dropped_clusters.push(c);
                }
            }
        }
    }
    out.drop = edges
        .iter()
        .filter(|e| dropped_clusters.contains(&e.center))
        .map(|e| e.neighbor)
        .collect();
    finish(out)
}

fn finish(mut d: PhaseDecision) -> PhaseDecision {
    d.add.sort_unstable();
    d.drop.sort_unstable();
    d
}

/// Final phase: the lightest edge into every adjacent cluster.
pub(crate) fn final_edges(edges: &[ResidualEdge]) -> Vec<VertexId> {
    let mut add: Vec<VertexId> = lightest_per_cluster(edges).values().map(|b| b.1).collect();
    add.sort_unstable();
    add
}

/// Randomized `(2k-1)`-hop spanner. Deterministic in `(g, k, c, seed)`.
pub fn cluster_hop_spanner(g: &WeightedGraph, k: usize, c: f64, seed: u64) -> Result<Subgraph> {
    check_k(k)?;
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "sampling constant must be positive, got {c}"
        )));
    }
    let n = g.n();
    let q = sampling_probability(n, k, c);
    let level: Vec<usize> = (0..n).map(|v| sample_level(seed, v, k, q)).collect();
    let mut cluster: Vec<Option<VertexId>> = (0..n).map(|v| g.is_present(v).then_some(v)).collect();
    let mut residual: Vec<BTreeMap<VertexId, Weight>> =
        (0..n).map(|v| g.adjacent(v).iter().copied().collect()).collect();
    let mut h = Subgraph::empty(g);

    let view =
        |x: VertexId, residual: &[BTreeMap<VertexId, Weight>], cluster: &[Option<VertexId>], phase: usize| {
            residual[x]
                .iter()
                .map(|(&y, &w)| {
                    let center = cluster[y].expect("unclustered vertices keep no residual edges");
                    ResidualEdge {
                        neighbor: y,
                        weight: w,
                        center,
                        kept: level[center] >= phase,
                    }
                })
                .collect::<Vec<_>>()
        };

    for phase in 1..k {
        let snapshot = cluster.clone();
        let mut removals = Vec::new();
        for x in g.vertices() {
            let Some(own) = snapshot[x] else { continue };
            if level[own] >= phase {
                continue;
            }
            let decision = decide_phase(&view(x, &residual, &snapshot, phase));
            for &y in &decision.add {
                h.insert(g, x, y)?;
            }
            removals.extend(decision.drop.iter().map(|&y| (x, y)));
            cluster[x] = decision.join;
        }
        for (x, y) in removals {
            residual[x].remove(&y);
            residual[y].remove(&x);
        }
        for x in 0..n {
            let own = cluster[x];
            residual[x].retain(|&y, _| own.is_none() || cluster[y] != own);
        }
    }
    for x in g.vertices() {
        for y in final_edges(&view(x, &residual, &cluster, k)) {
            h.insert(g, x, y)?;
        }
    }
    Ok(h)
}
