//! Executable edge-count certificate for graphs whose edges have small 2-balls.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::metrics::{hop_ball, hop_distances, two_ball_members};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallRemoval {
    pub radius: usize,
    pub center: VertexId,
    pub ball_size: usize,
    pub next_layer: usize,
    pub edges_removed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub n: usize,
    pub k: usize,
    pub edges: usize,
    /// `2 n^(1+1/k)`.
    pub bound: f64,
    /// First edge `(u, v)` with `|B²(uv, 2k) ∩ N(u)|^k > n`, and that count.
    pub witness: Option<(VertexId, VertexId, usize)>,
    pub bound_holds: bool,
    /// Each removal satisfied `m ≤ (n^(1/k) + 1)|B| + |next layer|`.
    pub removals_hold: bool,
    pub removals: Vec<BallRemoval>,
}

impl CertificateReport {
    pub fn hypothesis_holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn holds(&self) -> bool {
        self.hypothesis_holds() && self.bound_holds && self.removals_hold
    }
}

fn pow(x: usize, e: usize) -> u128 {
    (x as u128).checked_pow(e as u32).unwrap_or(u128::MAX)
}

/// Weights are ignored. `n` is the graph's vertex-slot count, so a working
/// graph with deleted vertices is measured against its original size.
pub fn residual_sparsity_certificate(g: &WeightedGraph, k: usize) -> Result<CertificateReport> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let g = g.unweighted();
    let n = g.n();
    let radius = Cost::Finite(2 * k as u64);
    let mut witness = None;
    'edges: for e in g.edges() {
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            let nbrs: Vec<VertexId> = g.adjacent(a).iter().map(|&(y, _)| y).collect();
            let count = two_ball_members(&g, a, b, radius, &nbrs, None).len();
            if pow(count, k) > n as u128 {
                witness = Some((a, b, count));
                break 'edges;
            }
        }
    }

    let edges = g.edge_count();
    let bound_holds = pow(edges, k) <= pow(2, k).saturating_mul(pow(n, k + 1));
    let mut removals = Vec::new();
    let mut removals_hold = true;
    let mut current = g.clone();
    for i in (0..k).rev() {
        let threshold = pow(n, i);
        loop {
            let found = current.vertices().find_map(|u| {
                let ball = hop_ball(&current, u, i).ok()?;
                (pow(ball.len(), k) >= threshold).then_some((u, ball))
            });
            let Some((center, ball)) = found else { break };
            let next_layer = hop_distances(&current, center, i + 1)
                .iter()
                .filter(|d| **d == Some(i + 1))
                .count();
            let removed_edges = removed_edge_count(&current, &ball);
            // m - |B| - |layer| ≤ n^(1/k) |B|, compared after raising to the k-th power
            let excess = removed_edges.saturating_sub(ball.len() + next_layer);
            if pow(excess, k) > (n as u128).saturating_mul(pow(ball.len(), k)) {
                removals_hold = false;
            }
            removals.push(BallRemoval {
                radius: i,
                center,
                ball_size: ball.len(),
                next_layer,
                edges_removed: removed_edges,
            });
            current = current.remove_vertices(&ball)?;
        }
    }
    Ok(CertificateReport {
        n,
        k,
        edges,
        bound: 2.0 * (n as f64).powf(1.0 + 1.0 / k as f64),
        witness,
        bound_holds,
        removals_hold,
        removals,
    })
}

fn removed_edge_count(g: &WeightedGraph, ball: &BTreeSet<VertexId>) -> usize {
    g.edges()
        .iter()
        .filter(|e| ball.contains(&e.u) || ball.contains(&e.v))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testgraphs::{complete, cycle, path};

    #[test]
    fn high_girth_graphs_pass_vacuously() {
        for g in [cycle(9, 3), path(10, 1), cycle(7, 1)] {
            let r = residual_sparsity_certificate(&g, 3).unwrap();
            assert!(r.hypothesis_holds());
            assert!(r.holds(), "{r:?}");
            assert_eq!(r.removals.iter().map(|b| b.ball_size).sum::<usize>(), g.n());
        }
    }

    #[test]
    fn complete_graphs_violate_the_hypothesis() {
        let r = residual_sparsity_certificate(&complete(5, 1), 2).unwrap();
        assert_eq!(r.witness, Some((0, 1, 4)));
        assert!(!r.holds());
        // the counted neighborhood includes v itself: 3 > sqrt(4)
        let r = residual_sparsity_certificate(&complete(4, 1), 2).unwrap();
        assert_eq!(r.witness, Some((0, 1, 3)));
    }

    #[test]
    fn short_cycles_count_toward_the_ball() {
        let c4 = cycle(4, 1);
        let r = residual_sparsity_certificate(&c4, 2).unwrap();
        assert_eq!(r.witness, None);
        let r = residual_sparsity_certificate(&c4, 1).unwrap();
        assert!(r.holds());
    }
}
