//! Fault-tolerant wrapper: union of an inner spanner run on many random
//! vertex-deleted copies of the graph, plus exhaustive verification.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cost::{within_stretch, Cost, Stretch};
use crate::error::{Error, Result};
use crate::graph::{Subgraph, VertexId, WeightedGraph};
use crate::hop::{HopAlgorithm, HopSpannerParams};
use crate::metrics::dijkstra;
use crate::seed::rng_for;

const FAULT_TAG: u64 = 0x0066_6175_6c74;

pub const DEFAULT_REPEAT_CONSTANT: f64 = 1.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FtParams {
    /// Number of vertex faults to tolerate.
    pub r: usize,
    /// Multiplier on `(r+1)^3 ln n` for the number of iterations.
    pub c: f64,
    pub seed: u64,
}

impl FtParams {
    pub fn new(r: usize, seed: u64) -> Self {
        Self {
            r,
            c: DEFAULT_REPEAT_CONSTANT,
            seed,
        }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "repeat constant must be positive, got {}",
                self.c
            )));
        }
        Ok(())
    }
}

/// `1` for `r = 0`, else `max(1, ceil(c (r+1)^3 ln n))`.
pub fn iteration_count(n: usize, r: usize, c: f64) -> usize {
    if r == 0 || n < 2 {
        return 1;
    }
    let q = (c * ((r + 1) as f64).powi(3) * (n as f64).ln()).ceil();
    (q as usize).max(1)
}

/// Whether `v` is deleted in iteration `j`: probability `1 - 1/(r+1)`.
pub fn in_fault_sample(seed: u64, j: usize, v: VertexId, r: usize) -> bool {
    if r == 0 {
        return false;
    }
    let p = 1.0 - 1.0 / (r + 1) as f64;
    rng_for(seed, &[FAULT_TAG, j as u64, v as u64]).gen::<f64>() < p
}

pub fn fault_sample(g: &WeightedGraph, seed: u64, j: usize, r: usize) -> BTreeSet<VertexId> {
    g.vertices().filter(|&v| in_fault_sample(seed, j, v, r)).collect()
}

/// `H = ∪_j A(G ∖ S_j)` over [`iteration_count`] iterations.
pub fn ft_spanner<F>(g: &WeightedGraph, params: &FtParams, mut inner: F) -> Result<Subgraph>
where
    F: FnMut(&WeightedGraph) -> Result<Subgraph>,
{
    params.validate()?;
    let q = iteration_count(g.n(), params.r, params.c);
    let mut h = Subgraph::empty(g);
    for j in 0..q {
        let removed = fault_sample(g, params.seed, j, params.r);
        let part = inner(&g.remove_vertices(&removed)?)?;
        h.union_with(&part);
    }
    Ok(h)
}

/// [`ft_spanner`] around a hop spanner; every iteration uses the same inner parameters.
pub fn ft_hop_spanner(
    g: &WeightedGraph,
    params: &FtParams,
    algorithm: HopAlgorithm,
    hop: &HopSpannerParams,
) -> Result<Subgraph> {
    hop.validate()?;
    ft_spanner(g, params, |sub| algorithm.run(sub, hop))
}

/// Limits on exhaustive fault enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaultGuard {
    pub max_n: usize,
    pub max_r: usize,
}

impl Default for FaultGuard {
    fn default() -> Self {
        Self { max_n: 14, max_r: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaultCheck {
    pub ok: bool,
    /// `(F, u, v)` with `d_{H∖F}(u,v) > s · d_{G∖F}(u,v)`.
    pub counterexample: Option<(Vec<VertexId>, VertexId, VertexId)>,
    pub fault_sets_checked: usize,
}

pub fn verify_fault_tolerance(g: &WeightedGraph, h: &Subgraph, r: usize, s: Stretch) -> Result<FaultCheck> {
    verify_fault_tolerance_with(g, h, r, s, FaultGuard::default())
}

/// Checks every fault set of at most `r` vertices and every surviving pair.
pub fn verify_fault_tolerance_with(
    g: &WeightedGraph,
    h: &Subgraph,
    r: usize,
    s: Stretch,
    guard: FaultGuard,
) -> Result<FaultCheck> {
    if g.n() > guard.max_n {
        return Err(Error::GuardExceeded {
            what: "fault-tolerance vertex count",
            actual: g.n(),
            limit: guard.max_n,
        });
    }
    if r > guard.max_r {
        return Err(Error::GuardExceeded {
            what: "fault budget",
            actual: r,
            limit: guard.max_r,
        });
    }
    let hg = h.to_graph();
    if h.n() != g.n() || !hg.is_subgraph_of(g) {
        return Err(Error::NotSubgraph);
    }
    let present: Vec<VertexId> = g.vertices().collect();
    let mut checked = 0;
    let mut fault: Vec<VertexId> = Vec::new();
    let mut found = None;
    for size in 0..=r.min(present.len()) {
        combinations(&present, size, &mut fault, 0, &mut |f| {
            if found.is_some() {
                return;
            }
            checked += 1;
            found = first_violation(g, &hg, f, s).map(|(u, v)| (f.to_vec(), u, v));
        });
        if found.is_some() {
            break;
        }
    }
    Ok(FaultCheck {
        ok: found.is_none(),
        counterexample: found,
        fault_sets_checked: checked,
    })
}

fn first_violation(
    g: &WeightedGraph,
    h: &WeightedGraph,
    fault: &[VertexId],
    s: Stretch,
) -> Option<(VertexId, VertexId)> {
    let set: BTreeSet<VertexId> = fault.iter().copied().collect();
    let gf = g.remove_vertices(&set).ok()?;
    let hf = h.remove_vertices(&set).ok()?;
    for u in gf.vertices() {
        let dg = dijkstra(&gf, u, None);
        let dh = dijkstra(&hf, u, None);
        for v in gf.vertices().filter(|&v| v > u) {
            if !within_stretch(dh[v], dg[v], s, Cost::ZERO) {
                return Some((u, v));
            }
        }
    }
    None
}

fn combinations(
    items: &[VertexId],
    size: usize,
    acc: &mut Vec<VertexId>,
    from: usize,
    f: &mut impl FnMut(&[VertexId]),
) {
    if acc.len() == size {
        f(acc);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < size - acc.len() {
            break;
        }
        acc.push(items[i]);
        combinations(items, size, acc, i + 1, f);
        acc.pop();
    }
}
