//! Undirected, positively weighted simple graphs and their spanning subgraphs.

mod bicomp;
mod fixture;
mod gen;
mod io;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cost::Weight;
use crate::error::{Error, Result};

pub use bicomp::{bicomponent_of, Bicomponent};
pub use fixture::{gen_fig1_fixture, Fig1Fixture};
pub use gen::{gen_random, gen_random_biconnected, RandomGraphSpec};
pub use io::{
    load_graph, load_graph_with, parse_edge_list, save_graph, save_graph_with_comments, write_edge_list,
    ParallelEdges,
};

pub type VertexId = usize;

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub w: Weight,
}

impl Edge {
    pub fn key(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Normalizes an unordered pair so the smaller id comes first.
pub fn edge_key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Immutable simple graph on vertex slots `0..n`.
///
/// Vertices deleted by [`WeightedGraph::remove_vertices`] keep their slot
/// (ids stay stable) but are marked absent and lose every incident edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(VertexId, Weight)>>,
    absent: Vec<bool>,
    max_weight: Weight,
}

impl WeightedGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            absent: vec![false; n],
            max_weight: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, zero weights, out-of-range ids
    /// and repeated pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        Self::build(n, edges, ParallelEdges::Reject)
    }

    pub(crate) fn build<I>(n: usize, edges: I, parallel: ParallelEdges) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        let mut map: BTreeMap<(VertexId, VertexId), Weight> = BTreeMap::new();
        for (a, b, w) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if w == 0 {
                return Err(Error::NonPositiveWeight(a, b));
            }
            let key = edge_key(a, b);
            match map.get_mut(&key) {
                None => {
                    map.insert(key, w);
                }
                Some(existing) => match parallel {
                    ParallelEdges::Reject => return Err(Error::DuplicateEdge(key.0, key.1)),
                    ParallelEdges::KeepMinimum => *existing = (*existing).min(w),
                },
            }
        }
        Ok(Self::from_sorted_map(n, map, vec![false; n]))
    }

    fn from_sorted_map(n: usize, map: BTreeMap<(VertexId, VertexId), Weight>, absent: Vec<bool>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(map.len());
        let mut max_weight = 0;
        for ((u, v), w) in map {
            adj[u].push((v, w));
            adj[v].push((u, w));
            edges.push(Edge { u, v, w });
            max_weight = max_weight.max(w);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self {
            n,
            edges,
            adj,
            absent,
            max_weight,
        }
    }

    /// Number of vertex slots, including removed ones.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Maximum edge weight, 0 for an edgeless graph.
    pub fn max_weight(&self) -> Weight {
        self.max_weight
    }

    pub fn is_present(&self, v: VertexId) -> bool {
        v < self.n && !self.absent[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n).filter(move |&v| !self.absent[v])
    }

    pub fn present_count(&self) -> usize {
        self.absent.iter().filter(|a| !**a).count()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// Neighbors with edge weights, sorted by neighbor id.
    pub fn adjacent(&self, v: VertexId) -> &[(VertexId, Weight)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        self.check_vertex(v)?;
        Ok(self.adj[v].iter().map(|&(x, _)| x).collect())
    }

    pub fn weight(&self, a: VertexId, b: VertexId) -> Option<Weight> {
        if a >= self.n {
            return None;
        }
        let list = &self.adj[a];
        list.binary_search_by_key(&b, |&(x, _)| x).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.weight(a, b).is_some()
    }

    /// Weight of `a-b`, or [`Error::NotAnEdge`].
    pub fn edge_weight(&self, a: VertexId, b: VertexId) -> Result<Weight> {
        self.weight(a, b).ok_or(Error::NotAnEdge(a, b))
    }

    /// Deletes `set` and all incident edges. Ids of the remaining vertices are
    /// unchanged; deleted slots are tombstoned.
    pub fn remove_vertices(&self, set: &BTreeSet<VertexId>) -> Result<WeightedGraph> {
        for &v in set {
            self.check_vertex(v)?;
        }
        let mut absent = self.absent.clone();
        for &v in set {
            absent[v] = true;
        }
        let map = self
            .edges
            .iter()
            .filter(|e| !set.contains(&e.u) && !set.contains(&e.v))
            .map(|e| (e.key(), e.w))
            .collect();
        Ok(Self::from_sorted_map(self.n, map, absent))
    }

    /// Graph with the same vertex slots and a subset of the edges.
    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> WeightedGraph {
        let map = self
            .edges
            .iter()
            .filter(|e| keep(e))
            .map(|e| (e.key(), e.w))
            .collect();
        Self::from_sorted_map(self.n, map, self.absent.clone())
    }

    /// Same topology with every weight set to one.
    pub fn unweighted(&self) -> WeightedGraph {
        let map = self.edges.iter().map(|e| (e.key(), 1)).collect();
        Self::from_sorted_map(self.n, map, self.absent.clone())
    }

    /// True when every edge of `self` is an edge of `parent` with the same weight.
    pub fn is_subgraph_of(&self, parent: &WeightedGraph) -> bool {
        self.n == parent.n && self.edges.iter().all(|e| parent.weight(e.u, e.v) == Some(e.w))
    }
}

/// Edge subset of a parent graph; all parent vertex slots are retained.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subgraph {
    n: usize,
    edges: BTreeMap<(VertexId, VertexId), Weight>,
}

impl Subgraph {
    pub fn empty(parent: &WeightedGraph) -> Self {
        Self {
            n: parent.n(),
            edges: BTreeMap::new(),
        }
    }

    /// The spanning subgraph containing every edge of `parent`.
    pub fn full(parent: &WeightedGraph) -> Self {
        Self {
            n: parent.n(),
            edges: parent.edges().iter().map(|e| (e.key(), e.w)).collect(),
        }
    }

    pub fn from_pairs<I>(parent: &WeightedGraph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut h = Self::empty(parent);
        for (a, b) in pairs {
            h.insert(parent, a, b)?;
        }
        Ok(h)
    }

    /// Interprets `graph` as a subgraph of `parent`.
    pub fn from_graph(parent: &WeightedGraph, graph: &WeightedGraph) -> Result<Self> {
        if !graph.is_subgraph_of(parent) {
            return Err(Error::NotSubgraph);
        }
        Ok(Self {
            n: parent.n(),
            edges: graph.edges().iter().map(|e| (e.key(), e.w)).collect(),
        })
    }

    pub fn insert(&mut self, parent: &WeightedGraph, a: VertexId, b: VertexId) -> Result<bool> {
        let w = parent.edge_weight(a, b)?;
        Ok(self.edges.insert(edge_key(a, b), w).is_none())
    }

    pub fn union_with(&mut self, other: &Subgraph) {
        for (&k, &w) in &other.edges {
            self.edges.insert(k, w);
        }
    }

    pub fn contains(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains_key(&edge_key(a, b))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.keys().copied()
    }

    pub fn is_subset_of(&self, other: &Subgraph) -> bool {
        self.edges.keys().all(|k| other.edges.contains_key(k))
    }

    pub fn to_graph(&self) -> WeightedGraph {
        WeightedGraph::from_sorted_map(self.n, self.edges.clone(), vec![false; self.n])
    }
}

#[cfg(test)]
pub(crate) mod testgraphs {
    use super::*;

    pub fn cycle(n: usize, w: Weight) -> WeightedGraph {
        WeightedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, w))).unwrap()
    }

    pub fn path(n: usize, w: Weight) -> WeightedGraph {
        WeightedGraph::from_edges(n, (1..n).map(|i| (i - 1, i, w))).unwrap()
    }

    pub fn complete(n: usize, w: Weight) -> WeightedGraph {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b, w));
            }
        }
        WeightedGraph::from_edges(n, e).unwrap()
    }

    pub fn star(leaves: usize) -> WeightedGraph {
        WeightedGraph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i, 1))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testgraphs::*;
    use super::*;

    #[test]
    fn rejects_invariant_violations() {
        assert!(matches!(
            WeightedGraph::from_edges(3, [(2, 2, 1)]),
            Err(Error::SelfLoop(2))
        ));
        assert!(matches!(
            WeightedGraph::from_edges(2, [(0, 1, 0)]),
            Err(Error::NonPositiveWeight(0, 1))
        ));
        assert!(matches!(
            WeightedGraph::from_edges(2, [(0, 1, 1), (1, 0, 2)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            WeightedGraph::from_edges(2, [(0, 5, 1)]),
            Err(Error::InvalidVertex { vertex: 5, .. })
        ));
    }

    #[test]
    fn collapses_parallel_edges_to_minimum() {
        let g = WeightedGraph::build(2, [(0, 1, 5), (1, 0, 2)], ParallelEdges::KeepMinimum).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.weight(0, 1), Some(2));
        assert_eq!(g.max_weight(), 2);
    }

    #[test]
    fn neighbors_of_k4() {
        let g = complete(4, 1);
        for u in 0..4 {
            assert_eq!(g.neighbors(u).unwrap().len(), 3);
        }
        assert!(g.neighbors(4).is_err());
    }

    #[test]
    fn remove_nothing_is_identity() {
        let g = complete(5, 3);
        assert_eq!(g.remove_vertices(&BTreeSet::new()).unwrap(), g);
    }

    #[test]
    fn removing_a_cycle_vertex_leaves_a_path() {
        let g = cycle(4, 1);
        let h = g.remove_vertices(&BTreeSet::from([0])).unwrap();
        assert_eq!(h.n(), 4);
        assert!(!h.is_present(0));
        assert_eq!(h.present_count(), 3);
        let keys: Vec<_> = h.edges().iter().map(Edge::key).collect();
        assert_eq!(keys, vec![(1, 2), (2, 3)]);
        assert!(h.remove_vertices(&BTreeSet::from([9])).is_err());
    }

    #[test]
    fn subgraph_roundtrip_and_union() {
        let g = cycle(5, 2);
        let mut a = Subgraph::from_pairs(&g, [(0, 1), (2, 1)]).unwrap();
        let b = Subgraph::from_pairs(&g, [(3, 4)]).unwrap();
        a.union_with(&b);
        assert_eq!(a.edge_count(), 3);
        assert!(a.contains(1, 2));
        assert!(a.to_graph().is_subgraph_of(&g));
        assert!(Subgraph::from_pairs(&g, [(0, 2)]).is_err());
        assert_eq!(Subgraph::full(&g).to_graph(), g);
    }
}
