//! Successive-shortest-path min-cost flow with Dijkstra on reduced costs.
//! All arc costs are non-negative, so zero initial potentials are feasible.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

const UNREACHED: i64 = i64::MAX;

pub(crate) struct MinCostFlow {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    orig_cap: Vec<i64>,
    cost: Vec<i64>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        Self {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig_cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        debug_assert!(cost >= 0);
        let id = self.to.len();
        self.adj[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.orig_cap.push(cap);
        self.cost.push(cost);
        self.adj[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        self.orig_cap.push(0);
        self.cost.push(-cost);
        id
    }

    /// Restores every arc to its initial capacity.
    pub fn reset(&mut self) {
        self.cap.copy_from_slice(&self.orig_cap);
    }

    pub fn arc_count(&self) -> usize {
        self.to.len() / 2
    }

    /// Endpoints of forward arc `k` (the k-th call to `add_arc`).
    pub fn arc(&self, k: usize) -> (usize, usize) {
        let id = 2 * k;
        (self.to[id + 1], self.to[id])
    }

    pub fn flow_on(&self, k: usize) -> i64 {
        let id = 2 * k;
        self.orig_cap[id] - self.cap[id]
    }

    /// Ships up to `limit` units from `s` to `t`; returns `(units, cost)` of a
    /// minimum-cost flow of that value.
    pub fn run(&mut self, s: usize, t: usize, limit: i64) -> (i64, i64) {
        let n = self.adj.len();
        let mut potential = vec![0i64; n];
        let mut dist = vec![UNREACHED; n];
        let mut parent = vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        let (mut shipped, mut total) = (0i64, 0i64);
        while shipped < limit {
            dist.fill(UNREACHED);
            parent.fill(usize::MAX);
            dist[s] = 0;
            heap.push(Reverse((0i64, s)));
            while let Some(Reverse((d, x))) = heap.pop() {
                if d > dist[x] {
                    continue;
                }
                for &a in &self.adj[x] {
                    if self.cap[a] <= 0 {
                        continue;
                    }
                    let y = self.to[a];
                    let nd = d + self.cost[a] + potential[x] - potential[y];
                    if nd < dist[y] {
                        dist[y] = nd;
                        parent[y] = a;
                        heap.push(Reverse((nd, y)));
                    }
                }
            }
            if dist[t] == UNREACHED {
                break;
            }
            for x in 0..n {
                if dist[x] != UNREACHED {
                    potential[x] += dist[x];
                }
            }
            let mut push = limit - shipped;
            let mut y = t;
            while y != s {
                let a = parent[y];
                push = push.min(self.cap[a]);
                y = self.to[a ^ 1];
            }
            let mut y = t;
            while y != s {
                let a = parent[y];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                total += push * self.cost[a];
                y = self.to[a ^ 1];
            }
            shipped += push;
        }
        (shipped, total)
    }
}
