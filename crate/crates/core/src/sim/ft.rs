//! Runs `q` copies of a protocol side by side, one per fault sample, packing
//! the copies' messages to a neighbor into a single message per round.

use super::{LocalView, Protocol};
use crate::ft::{in_fault_sample, iteration_count};
use crate::graph::VertexId;

#[derive(Clone, Copy, Debug)]
pub struct FtWrapper<P> {
    pub inner: P,
    pub r: usize,
    pub c: f64,
}

pub fn protocol_ft_wrapper<P: Protocol>(inner: P, r: usize, c: f64) -> FtWrapper<P> {
    FtWrapper { inner, r, c }
}

/// Per-instance state; `None` where the node was sampled out.
pub struct FtState<S> {
    instances: Vec<Option<S>>,
    steps: usize,
}

impl<S> FtState<S> {
    pub fn participates(&self, instance: usize) -> bool {
        self.instances.get(instance).is_some_and(Option::is_some)
    }
}

impl<P: Protocol> Protocol for FtWrapper<P> {
    type State = FtState<P::State>;
    /// `(instance, inner message)` slots.
    type Msg = Vec<(usize, P::Msg)>;

    fn init(&self, view: &LocalView<'_>, seed: u64) -> Self::State {
        let q = iteration_count(view.n, self.r, self.c);
        let instances = (0..q)
            .map(|j| (!in_fault_sample(seed, j, view.id, self.r)).then(|| self.inner.init(view, seed)))
            .collect();
        FtState { instances, steps: 0 }
    }

    fn step(
        &self,
        s: &mut Self::State,
        view: &LocalView<'_>,
        step: usize,
        inbox: &[(VertexId, Self::Msg)],
    ) -> Vec<(VertexId, Self::Msg)> {
        let mut outgoing: Vec<(VertexId, Self::Msg)> =
            view.incident.iter().map(|&(y, _)| (y, Vec::new())).collect();
        for (j, slot) in s.instances.iter_mut().enumerate() {
            let Some(state) = slot else { continue };
            if self.inner.finished(state) {
                continue;
            }
            let mine: Vec<(VertexId, P::Msg)> = inbox
                .iter()
                .flat_map(|(from, slots)| {
                    slots
                        .iter()
                        .filter(|(i, _)| *i == j)
                        .map(move |(_, m)| (*from, m.clone()))
                })
                .collect();
            for (y, msg) in self.inner.step(state, view, step, &mine) {
                if let Ok(pos) = outgoing.binary_search_by_key(&y, |o| o.0) {
                    outgoing[pos].1.push((j, msg));
                } else {
                    // let the harness reject the non-neighbor
                    outgoing.push((y, vec![(j, msg)]));
                }
            }
        }
        s.steps = step + 1;
        let keep_all = self.inner.fixed_schedule().is_some_and(|t| step < t);
        outgoing.retain(|(_, slots)| keep_all || !slots.is_empty());
        outgoing
    }

    fn finished(&self, s: &Self::State) -> bool {
        s.steps >= self.inner.fixed_schedule().unwrap_or(0)
            && s.instances.iter().flatten().all(|st| self.inner.finished(st))
    }

    fn output(&self, s: &Self::State) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = s
            .instances
            .iter()
            .flatten()
            .flat_map(|st| self.inner.output(st))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn payload(&self, msg: &Self::Msg) -> usize {
        msg.iter().map(|(_, m)| self.inner.payload(m)).sum()
    }

    fn fixed_schedule(&self) -> Option<usize> {
        self.inner.fixed_schedule()
    }
}
