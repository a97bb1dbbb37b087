//! Shared inputs for the benchmark suite.

use mps_core::graph::RandomGraphSpec;
use mps_core::{gen_random, WeightedGraph};

/// Random graph with expected degree `degree` and weights in `[1, wmax]`.
pub fn random_graph(n: usize, degree: f64, wmax: u64, seed: u64) -> WeightedGraph {
    let edge_prob = (degree / (n.max(2) - 1) as f64).min(1.0);
    gen_random(&RandomGraphSpec {
        n,
        edge_prob,
        weight_range: (1, wmax),
        seed,
    })
    .expect("valid spec")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_roughly_respected() {
        let g = random_graph(200, 10.0, 5, 1);
        let avg = 2.0 * g.edge_count() as f64 / 200.0;
        assert!((7.0..13.0).contains(&avg), "average degree {avg}");
    }
}
