use std::fmt::{self, Write as _};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{dijkstra, multipath_cost_value};
use crate::cost::{within_stretch, Cost, Stretch};
use crate::error::{Error, Result};
use crate::graph::{Subgraph, VertexId, WeightedGraph};

/// A stretch ratio `δ_H / δ_G`; unbounded when `H` disconnects a pair `G` joins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StretchValue {
    Finite(Stretch),
    Infinite,
}

impl StretchValue {
    fn of(h: Cost, g: Cost) -> Option<StretchValue> {
        match (h, g) {
            (_, Cost::Infinite) => None,
            (Cost::Infinite, _) => Some(StretchValue::Infinite),
            (Cost::Finite(h), Cost::Finite(g)) => Some(StretchValue::Finite(Ratio::new(h, g))),
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            StretchValue::Finite(r) => crate::cost::stretch_to_f64(r),
            StretchValue::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for StretchValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StretchValue::Finite(r) => write!(f, "{:.6}", crate::cost::stretch_to_f64(*r)),
            StretchValue::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub u: VertexId,
    pub v: VertexId,
    pub delta_g: Cost,
    pub delta_h: Cost,
}

impl PairRow {
    pub fn ratio(&self) -> Option<StretchValue> {
        StretchValue::of(self.delta_h, self.delta_g)
    }
}

/// All-pairs comparison of `δᵖ_H` against `α·δᵖ_G + β`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StretchReport {
    pub p: usize,
    pub alpha: Stretch,
    pub beta: Cost,
    pub rows: Vec<PairRow>,
    /// Largest ratio over pairs with finite `δ_G`; 1 when there are none.
    pub worst_ratio: StretchValue,
    pub worst_pair: Option<(VertexId, VertexId)>,
    /// Smallest `β'` with `δ_H ≤ α·δ_G + β'` on every pair.
    pub additive_slack: Cost,
    pub violations: Vec<(VertexId, VertexId)>,
}

impl StretchReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// `u,v,delta_g,delta_h,ratio`; the ratio is blank for pairs with `δ_G = inf`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,v,delta_g,delta_h,ratio\n");
        for row in &self.rows {
            let ratio = row.ratio().map(|r| r.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                row.u, row.v, row.delta_g, row.delta_h, ratio
            );
        }
        out
    }
}

fn slack(h: Cost, g: Cost, alpha: Stretch) -> Cost {
    match (h, g) {
        (_, Cost::Infinite) => Cost::ZERO,
        (Cost::Infinite, _) => Cost::Infinite,
        (Cost::Finite(h), Cost::Finite(g)) => {
            // ceil(h - alpha * g) clamped at zero, in exact arithmetic
            let num = *alpha.numer() as u128 * g as u128;
            let den = *alpha.denom() as u128;
            let h = h as u128 * den;
            if h <= num {
                Cost::ZERO
            } else {
                Cost::Finite((h - num).div_ceil(den) as u64)
            }
        }
    }
}

/// Checks `δᵖ_H(u,v) ≤ α·δᵖ_G(u,v) + β` for every pair `u < v` of present vertices.
pub fn verify_stretch(
    g: &WeightedGraph,
    h: &Subgraph,
    p: usize,
    alpha: Stretch,
    beta: Cost,
) -> Result<StretchReport> {
    if p < 1 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    let hg = h.to_graph();
    if h.n() != g.n() || !hg.is_subgraph_of(g) {
        return Err(Error::NotSubgraph);
    }
    let present: Vec<VertexId> = g.vertices().collect();
    let mut rows = Vec::new();
    for (i, &u) in present.iter().enumerate() {
        let (dg, dh) = if p == 1 {
            (dijkstra(g, u, None), dijkstra(&hg, u, None))
        } else {
            (Vec::new(), Vec::new())
        };
        for &v in &present[i + 1..] {
            let (delta_g, delta_h) = if p == 1 {
                (dg[v], dh[v])
            } else {
                (
                    multipath_cost_value(g, p, u, v),
                    multipath_cost_value(&hg, p, u, v),
                )
            };
            rows.push(PairRow {
                u,
                v,
                delta_g,
                delta_h,
            });
        }
    }
    let mut worst_ratio = StretchValue::Finite(Ratio::from_integer(1));
    let mut worst_pair = None;
    let mut additive_slack = Cost::ZERO;
    let mut violations = Vec::new();
    for row in &rows {
        if let Some(r) = row.ratio() {
            if worst_pair.is_none() || r > worst_ratio {
                worst_ratio = r;
                worst_pair = Some((row.u, row.v));
            }
        }
        additive_slack = additive_slack.max(slack(row.delta_h, row.delta_g, alpha));
        if !within_stretch(row.delta_h, row.delta_g, alpha, beta) {
            violations.push((row.u, row.v));
        }
    }
    Ok(StretchReport {
        p,
        alpha,
        beta,
        rows,
        worst_ratio,
        worst_pair,
        additive_slack,
        violations,
    })
}
