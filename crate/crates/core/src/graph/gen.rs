use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{VertexId, WeightedGraph};
use crate::cost::Weight;
use crate::error::{Error, Result};

/// Erdős–Rényi style random graph with uniform integer weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomGraphSpec {
    pub n: usize,
    pub edge_prob: f64,
    pub weight_range: (Weight, Weight),
    pub seed: u64,
}

impl RandomGraphSpec {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.weight_range;
        if lo < 1 || lo > hi {
            return Err(Error::InvalidParameter(format!(
                "weight range [{lo}, {hi}] must satisfy 1 <= min <= max"
            )));
        }
        if !(0.0..=1.0).contains(&self.edge_prob) {
            return Err(Error::InvalidParameter(format!(
                "edge probability {} outside [0, 1]",
                self.edge_prob
            )));
        }
        Ok(())
    }
}

/// Each unordered pair, visited in `(u, v)` order, becomes an edge with
/// probability `edge_prob`. The result is a pure function of `spec`.
pub fn gen_random(spec: &RandomGraphSpec) -> Result<WeightedGraph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (lo, hi) = spec.weight_range;
    let mut edges = Vec::new();
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            if rng.gen_bool(spec.edge_prob) {
                edges.push((u, v, rng.gen_range(lo..=hi)));
            }
        }
    }
    WeightedGraph::from_edges(spec.n, edges)
}

/// A Hamiltonian cycle through a random vertex order plus independent chords,
/// so the result is 2-vertex-connected whenever `spec.n >= 3`.
pub fn gen_random_biconnected(spec: &RandomGraphSpec) -> Result<WeightedGraph> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x9e37_79b9_7f4a_7c15);
    let (lo, hi) = spec.weight_range;
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    if n >= 3 {
        for i in 0..n {
            edges.push((order[i], order[(i + 1) % n], rng.gen_range(lo..=hi)));
        }
    }
    let on_cycle: std::collections::HashSet<(VertexId, VertexId)> =
        edges.iter().map(|&(a, b, _)| super::edge_key(a, b)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !on_cycle.contains(&(u, v)) && rng.gen_bool(spec.edge_prob) {
                edges.push((u, v, rng.gen_range(lo..=hi)));
            }
        }
    }
    WeightedGraph::from_edges(n, edges)
}
