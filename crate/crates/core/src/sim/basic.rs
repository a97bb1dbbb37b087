//! Reference protocols used to exercise the harness.

use super::{LocalView, Protocol};
use crate::graph::VertexId;

/// Does nothing and outputs nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct NullProtocol;

impl Protocol for NullProtocol {
    type State = ();
    type Msg = ();

    fn init(&self, _: &LocalView<'_>, _: u64) {}

    fn step(&self, _: &mut (), _: &LocalView<'_>, _: usize, _: &[(VertexId, ())]) -> Vec<(VertexId, ())> {
        Vec::new()
    }

    fn finished(&self, _: &()) -> bool {
        true
    }

    fn output(&self, _: &()) -> Vec<VertexId> {
        Vec::new()
    }

    fn payload(&self, _: &()) -> usize {
        0
    }
}

/// Floods a token from `source` for `depth` hops; each reached node outputs
/// the edge it first heard the token on (lowest sender id on ties).
#[derive(Clone, Copy, Debug)]
pub struct FloodProtocol {
    pub source: VertexId,
    pub depth: usize,
}

#[derive(Clone, Debug, Default)]
pub struct FloodState {
    hops: Option<usize>,
    parent: Option<VertexId>,
    done: bool,
}

impl Protocol for FloodProtocol {
    type State = FloodState;
    /// Hop count of the sender.
    type Msg = usize;

    fn init(&self, view: &LocalView<'_>, _: u64) -> FloodState {
        FloodState {
            hops: (view.id == self.source).then_some(0),
            ..FloodState::default()
        }
    }

    fn step(
        &self,
        s: &mut FloodState,
        view: &LocalView<'_>,
        step: usize,
        inbox: &[(VertexId, usize)],
    ) -> Vec<(VertexId, usize)> {
        if s.hops.is_none() {
            if let Some(&(from, h)) = inbox.iter().min_by_key(|(from, _)| *from) {
                s.hops = Some(h + 1);
                s.parent = Some(from);
            }
        }
        if step >= self.depth {
            s.done = true;
        }
        match s.hops {
            Some(h) if h == step && h < self.depth => {
                s.done = true;
                view.incident
                    .iter()
                    .filter(|&&(y, _)| Some(y) != s.parent)
                    .map(|&(y, _)| (y, h))
                    .collect()
            }
            Some(h) if h < step => {
                s.done = true;
                Vec::new()
            }
            _ => Vec::new(),
        }
    }

    fn finished(&self, s: &FloodState) -> bool {
        s.done
    }

    fn output(&self, s: &FloodState) -> Vec<VertexId> {
        s.parent.into_iter().collect()
    }

    fn payload(&self, _: &usize) -> usize {
        1
    }
}
