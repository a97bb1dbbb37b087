//! Bounded-hop spanners: every edge `uv` of `G` is replaced in `H` by a path of
//! few edges whose cost is a bounded multiple of `ω(uv)`.

mod check;
pub(crate) mod cluster;
mod greedy;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Subgraph, WeightedGraph};

pub use check::{is_b_hop_spanner, HopCheck};
pub use cluster::{cluster_hop_spanner, sample_level, sampling_probability};
pub use greedy::greedy_hop_spanner;

pub const DEFAULT_SAMPLING_CONSTANT: f64 = 2.0;

/// Parameters for the `(2k-1)`-hop constructions. `c` and `seed` only matter
/// for the clustered variant.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopSpannerParams {
    pub k: usize,
    pub c: f64,
    pub seed: u64,
}

impl HopSpannerParams {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            c: DEFAULT_SAMPLING_CONSTANT,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_k(self.k)?;
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "sampling constant must be positive, got {}",
                self.c
            )));
        }
        Ok(())
    }

    /// Hop bound (and stretch) `2k - 1`.
    pub fn hops(&self) -> usize {
        2 * self.k - 1
    }
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HopAlgorithm {
    Greedy,
    #[default]
    Cluster,
}

impl HopAlgorithm {
    pub fn id(self) -> &'static str {
        match self {
            HopAlgorithm::Greedy => "greedy-hop",
            HopAlgorithm::Cluster => "cluster-hop",
        }
    }

    pub fn run(self, g: &WeightedGraph, params: &HopSpannerParams) -> Result<Subgraph> {
        match self {
            HopAlgorithm::Greedy => greedy_hop_spanner(g, params.k),
            HopAlgorithm::Cluster => cluster_hop_spanner(g, params.k, params.c, params.seed),
        }
    }
}
