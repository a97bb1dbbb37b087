use super::{Subgraph, VertexId, WeightedGraph};
use crate::cost::Weight;
use crate::error::{Error, Result};

/// A cycle of `n + 1` vertices plus `n - 1` chords, with `H = G \ {uv}`.
///
/// Vertices: `u = 0`, `v = 1`, and the cycle runs `0-1-2-...-n-0`. Walking the
/// long arc from `v` to `u` visits `z_0 = v, z_1 = 2, ..., z_{n-1} = n, z_n = u`;
/// each interior `z_i` gets a bypass chord `z_{i-1} z_{i+1}`, so a single
/// fault on the arc can be detoured with one chord.
///
/// Weights are multiplied by `scale = n` to stay integral: `uv` weighs `n`,
/// arc edges weigh `s` and chords weigh `s * n`.
#[derive(Clone, Debug)]
pub struct Fig1Fixture {
    pub g: WeightedGraph,
    pub h: Subgraph,
    pub u: VertexId,
    pub v: VertexId,
    pub n: usize,
    pub s: u64,
    pub scale: Weight,
}

pub fn gen_fig1_fixture(n: usize, s: u64) -> Result<Fig1Fixture> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("fixture needs n >= 4, got {n}")));
    }
    if s <= 1 || s as usize >= n {
        return Err(Error::InvalidParameter(format!(
            "fixture needs 1 < s < n, got s={s}, n={n}"
        )));
    }
    let scale = n as Weight;
    let arc = |j: usize| if j == n { 0 } else { j + 1 };
    let mut edges = vec![(0, 1, scale)];
    for j in 0..n {
        edges.push((arc(j), arc(j + 1), s));
    }
    for i in 1..n {
        edges.push((arc(i - 1), arc(i + 1), s * scale));
    }
    let g = WeightedGraph::from_edges(n + 1, edges)?;
    let h = Subgraph::from_pairs(
        &g,
        g.edges().iter().filter(|e| e.key() != (0, 1)).map(|e| e.key()),
    )?;
    Ok(Fig1Fixture {
        g,
        h,
        u: 0,
        v: 1,
        n,
        s,
        scale,
    })
}
