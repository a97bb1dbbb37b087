//! End-to-end `p`-multipath spanner: a `(2k-1)`-hop spanner made
//! `(p-1)`-fault tolerant, with the stretch `φ(2k-1, p)` it is declared to meet.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cost::{within_stretch, Cost, Stretch};
use crate::error::{Error, Result};
use crate::ft::{ft_hop_spanner, FtParams, DEFAULT_REPEAT_CONSTANT};
use crate::graph::{Subgraph, VertexId, WeightedGraph};
use crate::hop::{HopAlgorithm, HopSpannerParams, DEFAULT_SAMPLING_CONSTANT};
use crate::metrics::{multipath_cost_value, verify_stretch, StretchReport};

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `φ(s, p) = s·p·r(s, p)` with `r(3, p) = 3` and otherwise
/// `r(s, p) = C(p+s-2, s-2) + C(p+s-3, s-2)`. Requires `s ≥ 3`.
pub fn compute_phi(s: u64, p: u64) -> Result<Stretch> {
    if s < 3 {
        return Err(Error::InvalidParameter(format!("phi needs s >= 3, got {s}")));
    }
    if p < 1 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let overflow = || Error::InvalidParameter(format!("phi({s}, {p}) overflows"));
    let r = if s == 3 {
        3
    } else {
        binomial(p + s - 2, s - 2)
            .zip(binomial(p + s - 3, s - 2))
            .and_then(|(a, b)| a.checked_add(b))
            .ok_or_else(overflow)?
    };
    s.checked_mul(p)
        .and_then(|x| x.checked_mul(r))
        .map(Ratio::from_integer)
        .ok_or_else(overflow)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineParams {
    pub p: usize,
    pub k: usize,
    pub algorithm: HopAlgorithm,
    /// Sampling constant of the clustered hop spanner.
    pub hop_c: f64,
    /// Repeat constant of the fault-tolerant wrapper.
    pub ft_c: f64,
    pub seed: u64,
}

impl PipelineParams {
    pub fn new(p: usize, k: usize, seed: u64) -> Self {
        Self {
            p,
            k,
            algorithm: HopAlgorithm::Cluster,
            hop_c: DEFAULT_SAMPLING_CONSTANT,
            ft_c: DEFAULT_REPEAT_CONSTANT,
            seed,
        }
    }

    pub fn with_algorithm(mut self, algorithm: HopAlgorithm) -> Self {
        self.algorithm = algorithm;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.p < 1 {
            return Err(Error::InvalidParameter("p must be at least 1".into()));
        }
        self.hop_params().validate()?;
        self.ft_params().validate()
    }

    pub fn hop_params(&self) -> HopSpannerParams {
        HopSpannerParams::new(self.k)
            .with_c(self.hop_c)
            .with_seed(self.seed)
    }

    pub fn ft_params(&self) -> FtParams {
        FtParams::new(self.p - 1, self.seed).with_c(self.ft_c)
    }

    /// `φ(2k-1, p)`, or 1 for `k = 1` where the hop spanner keeps every surviving edge.
    pub fn declared_stretch(&self) -> Result<Stretch> {
        if self.k == 1 {
            return Ok(Ratio::from_integer(1));
        }
        compute_phi(2 * self.k as u64 - 1, self.p as u64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipathSpanner {
    pub h: Subgraph,
    pub declared_stretch: Stretch,
}

pub fn multipath_spanner(g: &WeightedGraph, params: &PipelineParams) -> Result<MultipathSpanner> {
    params.validate()?;
    let declared_stretch = params.declared_stretch()?;
    let h = ft_hop_spanner(g, &params.ft_params(), params.algorithm, &params.hop_params())?;
    Ok(MultipathSpanner { h, declared_stretch })
}

/// All-pairs check of `δᵖ_H ≤ α·δᵖ_G`.
pub fn verify_multipath_stretch(
    g: &WeightedGraph,
    h: &Subgraph,
    p: usize,
    alpha: Stretch,
) -> Result<StretchReport> {
    verify_stretch(g, h, p, alpha, Cost::ZERO)
}

/// Edges `uv` of `G` missing from `H` with `δᵖ_H(u,v) > α·ω(uv)`.
pub fn edge_multipath_violations(
    g: &WeightedGraph,
    h: &Subgraph,
    p: usize,
    alpha: Stretch,
) -> Result<Vec<(VertexId, VertexId)>> {
    if p < 1 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let hg = h.to_graph();
    if h.n() != g.n() || !hg.is_subgraph_of(g) {
        return Err(Error::NotSubgraph);
    }
    Ok(g.edges()
        .iter()
        .filter(|e| !h.contains(e.u, e.v))
        .filter(|e| {
            !within_stretch(
                multipath_cost_value(&hg, p, e.u, e.v),
                Cost::Finite(e.w),
                alpha,
                Cost::ZERO,
            )
        })
        .map(|e| e.key())
        .collect())
}

/// `k · p^(2-1/k) · n^(1+1/k) · (ln n)^(2-1/k)`, the shape of the size bound.
pub fn size_reference(n: usize, p: usize, k: usize) -> f64 {
    let (n, p, k) = (n as f64, p as f64, k as f64);
    k * p.powf(2.0 - 1.0 / k) * n.powf(1.0 + 1.0 / k) * n.ln().max(1.0).powf(2.0 - 1.0 / k)
}

/// Summary record printed by the command-line front end.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuildSummary {
    pub n: usize,
    #[serde(rename = "m_G")]
    pub m_g: usize,
    #[serde(rename = "m_H")]
    pub m_h: usize,
    pub p: usize,
    pub k: usize,
    pub alpha_declared: serde_json::Value,
    pub worst_ratio: Option<f64>,
    pub seed: u64,
}

/// JSON number for a stretch: an integer when exact, a float otherwise.
pub fn stretch_json(s: Stretch) -> serde_json::Value {
    if s.is_integer() {
        serde_json::Value::from(s.to_integer())
    } else {
        serde_json::Value::from(crate::cost::stretch_to_f64(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testgraphs::complete;

    #[test]
    fn phi_table() {
        assert_eq!(compute_phi(3, 2).unwrap(), Ratio::from_integer(18));
        assert_eq!(compute_phi(3, 5).unwrap(), Ratio::from_integer(45));
        assert_eq!(compute_phi(5, 2).unwrap(), Ratio::from_integer(140));
        assert!(compute_phi(2, 2).is_err());
        assert!(compute_phi(1, 1).is_err());
    }

    #[test]
    fn phi_is_nine_p_at_three() {
        for p in 1..50 {
            assert_eq!(compute_phi(3, p).unwrap(), Ratio::from_integer(9 * p));
        }
    }

    #[test]
    fn phi_grows_with_p() {
        for s in 3..9 {
            for p in 1..20 {
                assert!(compute_phi(s, p).unwrap() <= compute_phi(s, p + 1).unwrap());
            }
        }
    }

    #[test]
    fn p1_k1_keeps_the_graph() {
        let g = complete(6, 4);
        let out = multipath_spanner(&g, &PipelineParams::new(1, 1, 3)).unwrap();
        assert_eq!(out.h, Subgraph::full(&g));
        assert_eq!(out.declared_stretch, Ratio::from_integer(1));
    }

    #[test]
    fn summary_field_names() {
        let s = BuildSummary {
            n: 3,
            m_g: 3,
            m_h: 2,
            p: 2,
            k: 2,
            alpha_declared: stretch_json(Ratio::from_integer(18)),
            worst_ratio: None,
            seed: 3,
        };
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"m_G":3,"m_H":2,"p":2,"k":2,"alpha_declared":18,"worst_ratio":null,"seed":3}"#
        );
    }
}
