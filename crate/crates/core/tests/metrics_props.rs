mod common;

use common::{cycle_through_bruteforce, small_graph};
use mps_core::metrics::BRUTE_FORCE_MAX_N;
use mps_core::{
    cycle_cost_through_edge, kappa_s, mu_s, multipath_cost, multipath_cost_bruteforce, shortest_path_cost,
    two_ball, Cost, WeightedGraph,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn flow_matches_enumeration(g in small_graph(8)) {
        for p in 1..=3 {
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if u != v {
                        let (c, witness) = multipath_cost(&g, p, u, v).unwrap();
                        prop_assert_eq!(c, multipath_cost_bruteforce(&g, p, u, v).unwrap());
                        match witness {
                            Some(w) => {
                                prop_assert_eq!(w.paths.len(), p);
                                prop_assert_eq!(w.total_cost, c);
                                prop_assert!(w.check(&g).is_ok(), "{:?}", w.check(&g));
                            }
                            None => prop_assert_eq!(c, Cost::Infinite),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn symmetric_and_p1_is_distance(g in small_graph(9)) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                prop_assert_eq!(multipath_cost(&g, 1, u, v).unwrap().0, shortest_path_cost(&g, u, v).unwrap());
                for p in 2..=3 {
                    prop_assert_eq!(multipath_cost(&g, p, u, v).unwrap().0, multipath_cost(&g, p, v, u).unwrap().0);
                }
            }
        }
    }

    #[test]
    fn more_paths_cost_more(g in small_graph(9)) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let costs: Vec<Cost> = (1..=4).map(|p| multipath_cost(&g, p, u, v).unwrap().0).collect();
                prop_assert!(costs.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn adding_an_edge_never_hurts(g in small_graph(8), a in 0usize..8, b in 0usize..8, w in 1u64..20) {
        let (a, b) = (a % g.n(), b % g.n());
        prop_assume!(a != b && !g.has_edge(a, b));
        let mut edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
        edges.push((a, b, w));
        let bigger = WeightedGraph::from_edges(g.n(), edges).unwrap();
        for p in 1..=3 {
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    prop_assert!(multipath_cost(&bigger, p, u, v).unwrap().0 <= multipath_cost(&g, p, u, v).unwrap().0);
                }
            }
        }
    }

    #[test]
    fn cycle_costs_match_enumeration(g in small_graph(9)) {
        for e in g.edges() {
            for w in 0..g.n() {
                let expect = cycle_through_bruteforce(&g, e.u, e.v, w).map_or(Cost::Infinite, Cost::Finite);
                prop_assert_eq!(cycle_cost_through_edge(&g, (e.u, e.v), w).unwrap(), expect);
            }
        }
    }

    #[test]
    fn two_ball_is_a_threshold_on_cycle_costs(g in small_graph(10), r in 0u64..60) {
        for e in g.edges() {
            let ball = two_ball(&g, (e.u, e.v), Cost::Finite(r)).unwrap();
            for w in 0..g.n() {
                let c = cycle_cost_through_edge(&g, (e.u, e.v), w).unwrap();
                prop_assert_eq!(ball.contains(&w), c <= Cost::Finite(r));
            }
        }
    }

    #[test]
    fn packing_never_exceeds_cutting(g in small_graph(9), s in 1usize..6) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.has_edge(u, v) {
                    continue;
                }
                let mu = mu_s(&g, u, v, s).unwrap();
                let kappa = kappa_s(&g, u, v, s).unwrap();
                prop_assert!(mu <= kappa);
                let full = g.n() - 1;
                prop_assert_eq!(mu_s(&g, u, v, full).unwrap(), kappa_s(&g, u, v, full).unwrap());
            }
        }
    }
}

#[test]
fn guard_bounds_the_oracles() {
    let g = common::random(BRUTE_FORCE_MAX_N + 1, 0.2, 3, 1);
    assert!(multipath_cost_bruteforce(&g, 2, 0, 1).is_err());
}
