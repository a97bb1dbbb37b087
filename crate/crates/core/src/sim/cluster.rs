//! Message-passing version of the clustered hop spanner. Every node talks to
//! every neighbor in steps `0..k`, so the protocol uses exactly `k` rounds.

use std::collections::{BTreeMap, BTreeSet};

use super::{LocalView, Protocol};
use crate::cost::Weight;
use crate::graph::VertexId;
use crate::hop::cluster::{decide_phase, final_edges, ResidualEdge};
use crate::hop::{sample_level, sampling_probability};

#[derive(Clone, Copy, Debug)]
pub struct ClusterProtocol {
    pub k: usize,
    pub c: f64,
}

pub fn protocol_cluster_spanner(k: usize, c: f64) -> ClusterProtocol {
    ClusterProtocol { k, c }
}

/// State a node announces to each neighbor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClusterMsg {
    pub center: Option<VertexId>,
    pub center_level: usize,
    /// Whether the sender still keeps the shared edge as residual.
    pub residual: bool,
}

#[derive(Clone, Debug)]
pub struct ClusterNode {
    level: usize,
    center: Option<VertexId>,
    center_level: usize,
    residual: BTreeMap<VertexId, Weight>,
    known: BTreeMap<VertexId, (Option<VertexId>, usize)>,
    added: BTreeSet<VertexId>,
    done: bool,
}

impl ClusterNode {
    fn absorb(&mut self, inbox: &[(VertexId, ClusterMsg)], first: bool) {
        if first {
            let senders: BTreeSet<VertexId> = inbox.iter().map(|m| m.0).collect();
            self.residual.retain(|y, _| senders.contains(y));
        }
        for &(y, msg) in inbox {
            self.known.insert(y, (msg.center, msg.center_level));
            if !msg.residual {
                self.residual.remove(&y);
            }
        }
        let own = self.center;
        let known = &self.known;
        self.residual
            .retain(|y, _| own.is_none() || known.get(y).map(|k| k.0) != Some(own));
    }

    fn view(&self, phase: usize) -> Vec<ResidualEdge> {
        self.residual
            .iter()
            .map(|(&y, &w)| {
                let (center, level) = self.known[&y];
                let center = center.expect("residual neighbors are clustered");
                ResidualEdge {
                    neighbor: y,
                    weight: w,
                    center,
                    kept: level >= phase,
                }
            })
            .collect()
    }
}

impl Protocol for ClusterProtocol {
    type State = ClusterNode;
    type Msg = ClusterMsg;

    fn init(&self, view: &LocalView<'_>, seed: u64) -> ClusterNode {
        let q = sampling_probability(view.n, self.k, self.c);
        let level = sample_level(seed, view.id, self.k, q);
        ClusterNode {
            level,
            center: Some(view.id),
            center_level: level,
            residual: view.incident.iter().copied().collect(),
            known: BTreeMap::new(),
            added: BTreeSet::new(),
            done: false,
        }
    }

    fn step(
        &self,
        s: &mut ClusterNode,
        view: &LocalView<'_>,
        step: usize,
        inbox: &[(VertexId, ClusterMsg)],
    ) -> Vec<(VertexId, ClusterMsg)> {
        if step > 0 {
            s.absorb(inbox, step == 1);
        }
        if step == self.k {
            s.added.extend(final_edges(&s.view(self.k)));
            s.done = true;
            return Vec::new();
        }
        if step > 0 && s.center.is_some() && s.center_level < step {
            let decision = decide_phase(&s.view(step));
            s.added.extend(decision.add.iter().copied());
            for y in &decision.drop {
                s.residual.remove(y);
            }
            s.center = decision.join;
            s.center_level = decision.join.map_or(0, |c| {
                s.known
                    .values()
                    .find(|k| k.0 == Some(c))
                    .map(|k| k.1)
                    .expect("joined cluster is adjacent")
            });
        }
        view.incident
            .iter()
            .map(|&(y, _)| {
                (
                    y,
                    ClusterMsg {
                        center: s.center,
                        center_level: s.center_level,
                        residual: s.residual.contains_key(&y),
                    },
                )
            })
            .collect()
    }

    fn finished(&self, s: &ClusterNode) -> bool {
        s.done
    }

    fn output(&self, s: &ClusterNode) -> Vec<VertexId> {
        s.added.iter().copied().collect()
    }

    fn payload(&self, _: &ClusterMsg) -> usize {
        3
    }

    fn fixed_schedule(&self) -> Option<usize> {
        Some(self.k)
    }
}

impl ClusterNode {
    pub fn level(&self) -> usize {
        self.level
    }
}
