use std::collections::BTreeMap;

use super::{RoundStats, RoundTrace};
use crate::cost::Weight;
use crate::error::{Error, Result};
use crate::graph::{Subgraph, VertexId, WeightedGraph};

/// Everything a node may know about the network: its id, the number of
/// vertex slots, and its incident edges.
#[derive(Clone, Copy, Debug)]
pub struct LocalView<'a> {
    pub id: VertexId,
    pub n: usize,
    pub incident: &'a [(VertexId, Weight)],
}

impl LocalView<'_> {
    pub fn weight_to(&self, y: VertexId) -> Option<Weight> {
        self.incident
            .binary_search_by_key(&y, |&(z, _)| z)
            .ok()
            .map(|i| self.incident[i].1)
    }
}

/// A synchronous message-passing algorithm.
///
/// In step `t` every unfinished node reads the messages sent to it in step
/// `t - 1` and may send messages to neighbors; a message sent in step `t`
/// travels during round `t + 1`.
pub trait Protocol {
    type State;
    type Msg: Clone;

    fn init(&self, view: &LocalView<'_>, seed: u64) -> Self::State;

    fn step(
        &self,
        state: &mut Self::State,
        view: &LocalView<'_>,
        step: usize,
        inbox: &[(VertexId, Self::Msg)],
    ) -> Vec<(VertexId, Self::Msg)>;

    fn finished(&self, state: &Self::State) -> bool;

    /// Neighbors `y` such that edge `{id, y}` belongs to the output.
    fn output(&self, state: &Self::State) -> Vec<VertexId>;

    /// Abstract size of a message.
    fn payload(&self, msg: &Self::Msg) -> usize;

    /// Number of initial steps in which every node messages every neighbor,
    /// when the protocol follows such a fixed schedule.
    fn fixed_schedule(&self) -> Option<usize> {
        None
    }
}

/// Runs `protocol` on every present vertex of `g`.
///
/// Fails with a budget error if a message would be sent in round
/// `max_rounds + 1`, or if some node is still unfinished after the last
/// allowed round's local computation.
pub fn run_protocol<P: Protocol>(
    g: &WeightedGraph,
    protocol: &P,
    max_rounds: usize,
    seed: u64,
) -> Result<(Subgraph, RoundTrace)> {
    let nodes: Vec<VertexId> = g.vertices().collect();
    let view = |x: VertexId| LocalView {
        id: x,
        n: g.n(),
        incident: g.adjacent(x),
    };
    let mut states: BTreeMap<VertexId, P::State> = nodes
        .iter()
        .map(|&x| (x, protocol.init(&view(x), seed)))
        .collect();
    let mut inboxes: BTreeMap<VertexId, Vec<(VertexId, P::Msg)>> = BTreeMap::new();
    let mut trace = RoundTrace::default();
    let mut step = 0;
    loop {
        if states.values().all(|s| protocol.finished(s)) {
            break;
        }
        if step > max_rounds {
            return Err(Error::RoundBudget {
                budget: max_rounds,
                partial: Box::new(trace),
            });
        }
        let mut next: BTreeMap<VertexId, Vec<(VertexId, P::Msg)>> = BTreeMap::new();
        let mut stats = RoundStats {
            round: step + 1,
            ..RoundStats::default()
        };
        for &x in &nodes {
            let state = states.get_mut(&x).expect("state per node");
            if protocol.finished(state) {
                continue;
            }
            let inbox = inboxes.remove(&x).unwrap_or_default();
            let v = view(x);
            for (y, msg) in protocol.step(state, &v, step, &inbox) {
                if v.weight_to(y).is_none() {
                    return Err(Error::Locality(format!(
                        "node {x} addressed non-neighbor {y} in step {step}"
                    )));
                }
                stats.messages += 1;
                stats.payload_units += protocol.payload(&msg);
                next.entry(y).or_default().push((x, msg));
            }
        }
        if stats.messages > 0 {
            if step >= max_rounds {
                return Err(Error::RoundBudget {
                    budget: max_rounds,
                    partial: Box::new(trace),
                });
            }
            while trace.rounds.len() < step {
                let round = trace.rounds.len() + 1;
                trace.rounds.push(RoundStats {
                    round,
                    ..RoundStats::default()
                });
            }
            trace.rounds.push(stats);
            trace.rounds_used = step + 1;
        }
        inboxes = next;
        step += 1;
    }
    let mut h = Subgraph::empty(g);
    for (&x, state) in &states {
        for y in protocol.output(state) {
            if !g.has_edge(x, y) {
                return Err(Error::Locality(format!(
                    "node {x} output non-incident edge to {y}"
                )));
            }
            h.insert(g, x, y)?;
        }
    }
    Ok((h, trace))
}
