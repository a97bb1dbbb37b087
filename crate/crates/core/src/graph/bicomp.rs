use std::collections::BTreeSet;

use super::{edge_key, Subgraph, VertexId, WeightedGraph};
use crate::error::Result;

/// The 2-vertex-connected component containing an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bicomponent {
    Block {
        vertices: BTreeSet<VertexId>,
        edges: Subgraph,
    },
    /// The edge lies on no cycle.
    CutEdge,
}

impl Bicomponent {
    pub fn is_cut_edge(&self) -> bool {
        matches!(self, Bicomponent::CutEdge)
    }
}

pub fn bicomponent_of(g: &WeightedGraph, a: VertexId, b: VertexId) -> Result<Bicomponent> {
    g.edge_weight(a, b)?;
    let block_of = edge_blocks(g);
    let target = block_of[edge_index(g, a, b)];
    let members: Vec<usize> = (0..g.edge_count()).filter(|&i| block_of[i] == target).collect();
    if members.len() == 1 {
        return Ok(Bicomponent::CutEdge);
    }
    let mut vertices = BTreeSet::new();
    let mut edges = Subgraph::empty(g);
    for i in members {
        let e = g.edges()[i];
        vertices.insert(e.u);
        vertices.insert(e.v);
        edges.insert(g, e.u, e.v)?;
    }
    Ok(Bicomponent::Block { vertices, edges })
}

fn edge_index(g: &WeightedGraph, a: VertexId, b: VertexId) -> usize {
    let key = edge_key(a, b);
    g.edges()
        .binary_search_by_key(&key, |e| e.key())
        .expect("edge present")
}

/// Assigns every edge (by index into `g.edges()`) the id of its block.
pub(crate) fn edge_blocks(g: &WeightedGraph) -> Vec<usize> {
    let n = g.n();
    let m = g.edge_count();
    let mut block = vec![usize::MAX; m];
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut next_block = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    // (vertex, index of the tree edge used to enter it, next adjacency position)
    let mut stack: Vec<(VertexId, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (x, parent_edge, ref mut pos)) = stack.last_mut() {
            let adj = g.adjacent(x);
            if *pos < adj.len() {
                let (y, _) = adj[*pos];
                *pos += 1;
                let e = edge_index(g, x, y);
                if e == parent_edge {
                    continue;
                }
                if disc[y] == usize::MAX {
                    edge_stack.push(e);
                    disc[y] = time;
                    low[y] = time;
                    time += 1;
                    stack.push((y, e, 0));
                } else if disc[y] < disc[x] {
                    edge_stack.push(e);
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[x]);
                    if low[x] >= disc[p] {
                        while let Some(e) = edge_stack.pop() {
                            block[e] = next_block;
                            if e == parent_edge {
                                break;
                            }
                        }
                        next_block += 1;
                    }
                }
            }
        }
    }
    block
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testgraphs::*;

    fn vertex_set(b: &Bicomponent) -> Vec<VertexId> {
        match b {
            Bicomponent::Block { vertices, .. } => vertices.iter().copied().collect(),
            Bicomponent::CutEdge => vec![],
        }
    }

    #[test]
    fn cycle_is_one_block() {
        let g = cycle(4, 1);
        for e in g.edges() {
            let b = bicomponent_of(&g, e.u, e.v).unwrap();
            assert_eq!(vertex_set(&b), vec![0, 1, 2, 3]);
        }
    }

    #[test]
    fn path_edges_are_cut_edges() {
        let g = path(3, 1);
        assert!(bicomponent_of(&g, 0, 1).unwrap().is_cut_edge());
        assert!(bicomponent_of(&g, 2, 1).unwrap().is_cut_edge());
        assert!(bicomponent_of(&g, 0, 2).is_err());
    }

    #[test]
    fn bowtie_splits_at_shared_vertex() {
        // triangles {0,1,2} and {2,3,4} share vertex 2
        let g = WeightedGraph::from_edges(
            5,
            [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 1), (3, 4, 1), (2, 4, 1)],
        )
        .unwrap();
        let b = bicomponent_of(&g, 0, 1).unwrap();
        assert_eq!(vertex_set(&b), vec![0, 1, 2]);
        if let Bicomponent::Block { edges, .. } = &b {
            assert_eq!(edges.edge_count(), 3);
        }
        assert_eq!(vertex_set(&bicomponent_of(&g, 3, 4).unwrap()), vec![2, 3, 4]);
    }

    #[test]
    fn bridge_between_cycles() {
        let mut e: Vec<_> = (0..4).map(|i| (i, (i + 1) % 4, 1)).collect();
        e.extend((0..4).map(|i| (4 + i, 4 + (i + 1) % 4, 1)));
        e.push((0, 4, 2));
        let g = WeightedGraph::from_edges(8, e).unwrap();
        assert!(bicomponent_of(&g, 0, 4).unwrap().is_cut_edge());
        assert_eq!(vertex_set(&bicomponent_of(&g, 5, 6).unwrap()), vec![4, 5, 6, 7]);
    }
}
