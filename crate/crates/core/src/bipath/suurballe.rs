//! Shortest pairs of arc-disjoint dipaths.

use crate::cost::{Cost, Weight};
use crate::flow::MinCostFlow;

/// Directed graph with non-negative arc costs; parallel arcs are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize, Weight)>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Self { n, arcs: Vec::new() }
    }

    /// Adds `from -> to` and returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, cost: Weight) -> usize {
        assert!(from < self.n && to < self.n, "arc endpoint out of range");
        self.arcs.push((from, to, cost));
        self.arcs.len() - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize, Weight)] {
        &self.arcs
    }
}

/// Two arc-disjoint dipaths, each a vertex sequence from source to target.
pub type DipathPair = [Vec<usize>; 2];

/// Minimum-cost flow of two units over arcs costed by `cost(arc index)`;
/// returns the total and the arcs carrying flow.
pub(crate) fn cheapest_pair_by<F>(d: &Digraph, src: usize, dst: usize, cost: F) -> Option<(i64, Vec<usize>)>
where
    F: Fn(usize) -> i64,
{
    if src == dst {
        return None;
    }
    let mut net = MinCostFlow::new(d.n);
    for (i, &(a, b, _)) in d.arcs.iter().enumerate() {
        net.add_arc(a, b, 1, cost(i));
    }
    let (units, total) = net.run(src, dst, 2);
    (units == 2).then(|| (total, (0..d.arcs.len()).filter(|&i| net.flow_on(i) > 0).collect()))
}

/// Splits a two-unit arc set into two walks, erasing any loops.
fn decompose(d: &Digraph, src: usize, dst: usize, used: &[usize]) -> DipathPair {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); d.n];
    for &i in used {
        out[d.arcs[i].0].push(i);
    }
    for list in &mut out {
        list.sort_by_key(|&i| std::cmp::Reverse((d.arcs[i].1, i)));
    }
    let mut trace = || {
        let mut path = vec![src];
        let mut x = src;
        while x != dst {
            let arc = out[x].pop().expect("two units leave every visited vertex");
            x = d.arcs[arc].1;
            if let Some(pos) = path.iter().position(|&y| y == x) {
                path.truncate(pos + 1);
            } else {
                path.push(x);
            }
        }
        path
    };
    let first = trace();
    let second = trace();
    [first, second]
}

/// Cheapest pair of arc-disjoint `src -> dst` dipaths; `Infinite` when none exists.
pub fn suurballe_pair(d: &Digraph, src: usize, dst: usize) -> (Cost, Option<DipathPair>) {
    match cheapest_pair_by(d, src, dst, |i| d.arcs[i].2 as i64) {
        Some((total, used)) => (Cost::Finite(total as u64), Some(decompose(d, src, dst, &used))),
        None => (Cost::Infinite, None),
    }
}

/// [`suurballe_pair`] from `src` to every vertex; the entry for `src` is `Infinite`.
pub fn suurballe_all(d: &Digraph, src: usize) -> Vec<(Cost, Option<DipathPair>)> {
    (0..d.n).map(|t| suurballe_pair(d, src, t)).collect()
}
