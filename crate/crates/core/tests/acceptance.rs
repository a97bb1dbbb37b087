//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Pass criterion numbers as arguments to run a subset, e.g.
//! `cargo test -p mps-core --test acceptance -- 5 8`.

mod common;

use std::time::Instant;

use common::{biconnected, girth, random};
use mps_core::ft::{FaultGuard, FtParams};
use mps_core::pipeline::edge_multipath_violations;
use mps_core::sim::RoundTrace;
use mps_core::{
    bipath_spanner_with, cluster_hop_spanner, compute_phi, cycle_cost_through_edge, ft_hop_spanner,
    gen_fig1_fixture, greedy_hop_spanner, is_b_hop_spanner, multipath_cost, multipath_cost_bruteforce,
    multipath_spanner, protocol_cluster_spanner, protocol_ft_wrapper, residual_sparsity_certificate,
    run_protocol, spst2, verify_fault_tolerance_with, verify_multipath_stretch, verify_stretch, Cost,
    HopAlgorithm, HopSpannerParams, PipelineParams, SpstSource, StretchValue, Subgraph, WeightedGraph,
};
use num_rational::Ratio;

type Outcome = Result<String, String>;

fn int(x: u64) -> Ratio<u64> {
    Ratio::from_integer(x)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_oracle_equivalence() -> Outcome {
    let mut graphs = 0;
    let mut checks = 0;
    for seed in 0..120u64 {
        let n = 3 + (seed as usize % 6);
        let p = 0.2 + 0.7 * ((seed * 37 % 100) as f64 / 100.0);
        let g = random(n, p, 9, seed);
        graphs += 1;
        for pp in 1..=3 {
            for u in 0..n {
                for v in u + 1..n {
                    let flow = multipath_cost(&g, pp, u, v).map_err(|e| e.to_string())?.0;
                    let brute = multipath_cost_bruteforce(&g, pp, u, v).map_err(|e| e.to_string())?;
                    ensure(flow == brute, || {
                        format!("seed {seed} p={pp} ({u},{v}): flow {flow} vs brute {brute}")
                    })?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!(
        "{graphs} graphs (n<=8), {checks} (graph, p, pair) checks equal"
    ))
}

fn c2_greedy() -> Outcome {
    let mut runs = 0;
    for k in [2usize, 3] {
        for n in [100usize, 200, 400] {
            let g = random(n, 16.0 / n as f64, 100, n as u64 + k as u64);
            let h = greedy_hop_spanner(&g, k).map_err(|e| e.to_string())?;
            let len = girth(&h.to_graph());
            ensure(len.is_none_or(|l| l > 2 * k), || {
                format!("k={k} n={n}: girth {len:?}")
            })?;
            let bound = (n as f64).powf(1.0 + 1.0 / k as f64);
            ensure((h.edge_count() as f64) < bound, || {
                format!("k={k} n={n}: {} edges", h.edge_count())
            })?;
            let s = 2 * k as u64 - 1;
            let check = is_b_hop_spanner(&g, &h, s as usize, int(s)).map_err(|e| e.to_string())?;
            ensure(check.ok, || {
                format!("k={k} n={n}: hop check failed at {:?}", check.counterexample)
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs: girth > 2k, |E| < n^(1+1/k), (2k-1)-hop"))
}

fn c3_cluster() -> Outcome {
    let mut runs = 0;
    let mut worst: f64 = 0.0;
    for k in [2usize, 3] {
        for n in [100usize, 400] {
            let g = random(n, 20.0 / n as f64, 100, 7 * n as u64 + k as u64);
            for seed in 0..10 {
                let h = cluster_hop_spanner(&g, k, 2.0, seed).map_err(|e| e.to_string())?;
                let s = 2 * k as u64 - 1;
                let check = is_b_hop_spanner(&g, &h, s as usize, int(s)).map_err(|e| e.to_string())?;
                ensure(check.ok, || {
                    format!("k={k} n={n} seed={seed}: {:?}", check.counterexample)
                })?;
                let (nf, kf) = (n as f64, k as f64);
                let reference = kf * nf.powf(1.0 + 1.0 / kf) * nf.ln().powf(1.0 - 1.0 / kf);
                worst = worst.max(h.edge_count() as f64 / reference);
                runs += 1;
            }
        }
    }
    Ok(format!(
        "{runs} runs, 0 failures; max |E|/(k n^(1+1/k) ln^(1-1/k) n) = {worst:.3}"
    ))
}

fn c4_fault_tolerance() -> Outcome {
    let mut runs = 0;
    let mut fault_sets = 0;
    for seed in 0..20u64 {
        let n = 8 + (seed as usize % 5);
        let g = random(n, 0.45, 20, 100 + seed);
        for r in [1usize, 2] {
            let k = 2;
            let hop = HopSpannerParams::new(k).with_seed(seed);
            let ft = FtParams::new(r, seed).with_c(4.0);
            let h = ft_hop_spanner(&g, &ft, HopAlgorithm::Cluster, &hop).map_err(|e| e.to_string())?;
            let check = verify_fault_tolerance_with(&g, &h, r, int(3), FaultGuard::default())
                .map_err(|e| e.to_string())?;
            ensure(check.ok, || {
                format!("seed {seed} r={r}: {:?}", check.counterexample)
            })?;
            fault_sets += check.fault_sets_checked;
            runs += 1;
        }
    }
    Ok(format!(
        "{runs} runs (c=4, cluster inner k=2), {fault_sets} fault sets, all pairs pass"
    ))
}

struct PipelineRun {
    g: WeightedGraph,
    h: Subgraph,
}

fn pipeline_runs() -> Result<Vec<PipelineRun>, String> {
    let mut runs = Vec::new();
    for (i, n) in [40usize, 60, 80, 100, 120].into_iter().enumerate() {
        let g = random(n, 0.35, 100, 500 + i as u64);
        for seed in 0..5 {
            let out = multipath_spanner(&g, &PipelineParams::new(2, 2, seed)).map_err(|e| e.to_string())?;
            ensure(out.declared_stretch == int(18), || {
                format!("declared {}", out.declared_stretch)
            })?;
            runs.push(PipelineRun {
                g: g.clone(),
                h: out.h,
            });
        }
    }
    Ok(runs)
}

fn c5_pipeline() -> Outcome {
    let runs = pipeline_runs()?;
    let mut worst = StretchValue::Finite(int(1));
    let mut pairs = 0;
    for (i, run) in runs.iter().enumerate() {
        let report = verify_multipath_stretch(&run.g, &run.h, 2, int(18)).map_err(|e| e.to_string())?;
        ensure(report.passed(), || {
            format!("run {i}: {} violating pairs", report.violations.len())
        })?;
        worst = worst.max(report.worst_ratio);
        pairs += report.rows.len();
    }
    Ok(format!(
        "{} runs, {pairs} pairs, worst δ²_H/δ²_G = {worst} <= 18",
        runs.len()
    ))
}

fn c6_per_edge() -> Outcome {
    let runs = pipeline_runs()?;
    let mut missing = 0;
    for (i, run) in runs.iter().enumerate() {
        let bad = edge_multipath_violations(&run.g, &run.h, 2, int(18)).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("run {i}: edges {bad:?}"))?;
        missing += run.g.edge_count() - run.h.edge_count();
    }
    Ok(format!(
        "{missing} dropped edges over {} runs, all within 18·ω(uv)",
        runs.len()
    ))
}

fn spst_instances() -> Vec<(WeightedGraph, (usize, usize))> {
    let mut out = Vec::new();
    for seed in 0..50u64 {
        let n = 10 + (seed as usize % 51);
        let g = biconnected(n, 3.0 / n as f64, 50, 900 + seed);
        let e = g.edges()[(seed as usize * 7) % g.edge_count()];
        out.push((g, (e.u, e.v)));
    }
    out
}

fn c7_spst() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut vertices = 0;
    for (i, (g, root)) in spst_instances().iter().enumerate() {
        let t = spst2(g, *root).map_err(|e| e.to_string())?;
        ensure(t.tree.edge_count() <= 4 * t.nu(), || {
            format!("instance {i}: {} > 4·{}", t.tree.edge_count(), t.nu())
        })?;
        worst = worst.max(t.tree.edge_count() as f64 / t.nu() as f64);
        let tg = t.tree.to_graph();
        for &w in &t.vertices {
            let oracle = cycle_cost_through_edge(g, *root, w).map_err(|e| e.to_string())?;
            let in_tree = cycle_cost_through_edge(&tg, *root, w).map_err(|e| e.to_string())?;
            ensure(t.costs[&w] == oracle && in_tree == oracle, || {
                format!(
                    "instance {i} w={w}: recorded {} tree {in_tree} oracle {oracle}",
                    t.costs[&w]
                )
            })?;
            vertices += 1;
        }
    }
    Ok(format!(
        "50 instances, {vertices} vertices exact; max |T|/ν = {worst:.2} <= 4"
    ))
}

fn c10_triangle() -> Outcome {
    let mut pairs = 0;
    for (i, (g, root)) in spst_instances().iter().enumerate() {
        let t = spst2(g, *root).map_err(|e| e.to_string())?;
        let w = g.weight(root.0, root.1).unwrap();
        let inner: Vec<usize> = t
            .vertices
            .iter()
            .copied()
            .filter(|&x| x != root.0 && x != root.1)
            .collect();
        for (ia, &a) in inner.iter().enumerate() {
            for &b in &inner[ia + 1..] {
                let lhs = multipath_cost(g, 2, a, b).map_err(|e| e.to_string())?.0;
                let rhs = (t.costs[&a] + t.costs[&b]).saturating_sub(w);
                ensure(lhs <= rhs, || format!("instance {i} ({a},{b}): {lhs} > {rhs}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{pairs} pairs satisfy δ²(a,b) <= δ²_T(a) + δ²_T(b) - ω(uv)"
    ))
}

struct BipathCase {
    label: &'static str,
    uniform: bool,
    g: WeightedGraph,
}

fn bipath_cases() -> Vec<BipathCase> {
    let mut cases = Vec::new();
    for i in 0..20u64 {
        let n = [60usize, 100, 150][i as usize % 3];
        let p = 0.12 + 0.02 * (i % 4) as f64;
        let (label, uniform, g) = match i % 4 {
            0 => ("uniform W=1", true, random(n, p, 1, 2000 + i)),
            1 => ("uniform W=10", true, random(n, p, 1, 2000 + i)),
            _ => ("weights [1,10]", false, random(n, p, 10, 2000 + i)),
        };
        let g = if i % 4 == 1 { scale(&g, 10) } else { g };
        cases.push(BipathCase { label, uniform, g });
    }
    cases
}

fn scale(g: &WeightedGraph, f: u64) -> WeightedGraph {
    WeightedGraph::from_edges(g.n(), g.edges().iter().map(|e| (e.u, e.v, e.w * f))).unwrap()
}

fn c8_c9_bipath() -> (Outcome, Outcome) {
    let mut lines = Vec::new();
    let mut uniform_fail = None;
    let mut worst_c: f64 = 0.0;
    let mut hetero_violations = [0usize; 2];
    let mut iterations = 0;
    let mut cert_fail = None;
    let mut certs = 0;
    for (i, case) in bipath_cases().iter().enumerate() {
        for (vi, source) in [SpstSource::Current, SpstSource::Frozen].into_iter().enumerate() {
            let out = match bipath_spanner_with(&case.g, source) {
                Ok(o) => o,
                Err(e) => return (Err(e.to_string()), Err("bipath failed".into())),
            };
            iterations += out.trace.iterations.len();
            let beta = Cost::Finite(24 * case.g.max_weight());
            let report = verify_stretch(&case.g, &out.h, 2, int(2), beta).unwrap();
            let n = case.g.n() as f64;
            worst_c = worst_c.max(out.h.edge_count() as f64 / n.powf(1.5));
            if !report.passed() {
                if case.uniform {
                    uniform_fail.get_or_insert(format!(
                        "case {i} ({}, {source:?}): {} violations",
                        case.label,
                        report.violations.len()
                    ));
                } else {
                    hetero_violations[vi] += report.violations.len();
                }
            }
            let cert = residual_sparsity_certificate(&out.residual, 2).unwrap();
            certs += 1;
            if !cert.holds() {
                cert_fail.get_or_insert(format!("case {i} {source:?}: {cert:?}"));
            }
        }
        lines.push(case.label);
    }
    for k in [2usize, 3] {
        for seed in 0..4u64 {
            let g = random(100, 0.15, 20, 3000 + seed);
            let high_girth = greedy_hop_spanner(&g, k).unwrap().to_graph();
            let cert = residual_sparsity_certificate(&high_girth, k).unwrap();
            certs += 1;
            if !cert.holds() {
                cert_fail.get_or_insert(format!("girth graph k={k} seed={seed}: {:?}", cert.witness));
            }
        }
    }
    let c8 = match uniform_fail {
        Some(msg) => Err(msg),
        None => Ok(format!(
            "20 graphs x 2 tree variants, {iterations} loop iterations; uniform runs pass; \
             heterogeneous violations: current={}, frozen={}; max |E(H)|/n^1.5 = {worst_c:.3}",
            hetero_violations[0], hetero_violations[1]
        )),
    };
    let c9 = match cert_fail {
        Some(msg) => Err(msg),
        None => Ok(format!(
            "{certs} certificates hold (40 residual graphs, 8 girth > 2k graphs)"
        )),
    };
    (c8, c9)
}

fn c11_fixture() -> Outcome {
    let mut parts = Vec::new();
    for n in [8usize, 16, 32] {
        let s = 4;
        let f = gen_fig1_fixture(n, s).map_err(|e| e.to_string())?;
        let guard = FaultGuard { max_n: 40, max_r: 1 };
        let ft = verify_fault_tolerance_with(&f.g, &f.h, 1, int(2 * s), guard).map_err(|e| e.to_string())?;
        ensure(ft.ok, || {
            format!(
                "n={n}: not a 1-fault tolerant 2s-spanner: {:?}",
                ft.counterexample
            )
        })?;
        let report = verify_stretch(&f.g, &f.h, 2, int(1), Cost::ZERO).map_err(|e| e.to_string())?;
        ensure(
            report.worst_ratio >= StretchValue::Finite(Ratio::new(n as u64, 2)),
            || format!("n={n}: worst ratio {} < n/2", report.worst_ratio),
        )?;
        parts.push(format!("n={n}: {}", report.worst_ratio));
    }
    Ok(format!(
        "1-FT 2s-spanner with δ² ratio >= n/2 ({})",
        parts.join(", ")
    ))
}

fn c12_local() -> Outcome {
    let mut runs = 0;
    for (i, n) in [30usize, 60, 100].into_iter().enumerate() {
        let g = random(n, 10.0 / n as f64, 50, 4000 + i as u64);
        for k in 1..=3usize {
            for seed in 0..3u64 {
                let bare = protocol_cluster_spanner(k, 2.0);
                let (h, trace) = run_protocol(&g, &bare, 3 * k, seed).map_err(|e| e.to_string())?;
                ensure(trace.rounds_used <= 3 * k, || {
                    format!("n={n} k={k}: {} rounds", trace.rounds_used)
                })?;
                let seq = cluster_hop_spanner(&g, k, 2.0, seed).map_err(|e| e.to_string())?;
                ensure(h == seq, || {
                    format!("n={n} k={k} seed={seed}: distributed differs from sequential")
                })?;
                let wrapped = protocol_ft_wrapper(protocol_cluster_spanner(k, 2.0), 1, 1.0);
                let (fh, ftrace) = run_protocol(&g, &wrapped, 3 * k, seed).map_err(|e| e.to_string())?;
                ensure(same_schedule(&trace, &ftrace), || {
                    format!("n={n} k={k}: FT trace differs in rounds/messages")
                })?;
                let hop = HopSpannerParams::new(k).with_seed(seed);
                let fseq = ft_hop_spanner(&g, &FtParams::new(1, seed), HopAlgorithm::Cluster, &hop)
                    .map_err(|e| e.to_string())?;
                ensure(fh == fseq, || {
                    format!("n={n} k={k} seed={seed}: FT distributed differs from sequential")
                })?;
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} instances: cluster rounds = k <= 3k, FT rounds and message counts equal bare, outputs bit-exact"))
}

fn same_schedule(a: &RoundTrace, b: &RoundTrace) -> bool {
    a.rounds_used == b.rounds_used
        && a.rounds.len() == b.rounds.len()
        && a.rounds
            .iter()
            .zip(&b.rounds)
            .all(|(x, y)| x.messages == y.messages)
}

fn c13_phi() -> Outcome {
    for (s, p, want) in [(3, 2, 18), (3, 5, 45), (5, 2, 140)] {
        let got = compute_phi(s, p).map_err(|e| e.to_string())?;
        ensure(got == int(want), || {
            format!("phi({s},{p}) = {got}, expected {want}")
        })?;
    }
    Ok("phi(3,2)=18, phi(3,5)=45, phi(5,2)=140".into())
}

fn main() {
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let on = |id: usize| wanted.is_empty() || wanted.contains(&id);
    let mut results: Vec<(usize, &str, Outcome, f64)> = Vec::new();
    let run = |id: usize, name: &'static str, f: &dyn Fn() -> Outcome, results: &mut Vec<_>| {
        if on(id) {
            let t = Instant::now();
            let outcome = f();
            let secs = t.elapsed().as_secs_f64();
            print_line(id, name, &outcome, secs);
            results.push((id, name, outcome, secs));
        }
    };
    run(1, "oracle equivalence", &c1_oracle_equivalence, &mut results);
    run(2, "greedy hop spanner", &c2_greedy, &mut results);
    run(3, "cluster hop spanner", &c3_cluster, &mut results);
    run(4, "fault tolerance", &c4_fault_tolerance, &mut results);
    run(5, "pipeline stretch p=k=2", &c5_pipeline, &mut results);
    run(6, "per-edge multipath bound", &c6_per_edge, &mut results);
    run(7, "shortest 2-path spanning tree", &c7_spst, &mut results);
    if on(8) || on(9) {
        let t = Instant::now();
        let (c8, c9) = c8_c9_bipath();
        let secs = t.elapsed().as_secs_f64();
        for (id, name, outcome) in [(8, "bipath spanner", c8), (9, "sparsity certificate", c9)] {
            if on(id) {
                print_line(id, name, &outcome, secs);
                results.push((id, name, outcome, secs));
            }
        }
    }
    run(10, "triangle-like property", &c10_triangle, &mut results);
    run(11, "fixture stretch", &c11_fixture, &mut results);
    run(12, "LOCAL simulation", &c12_local, &mut results);
    run(13, "phi table", &c13_phi, &mut results);
    let failed = results.iter().filter(|r| r.2.is_err()).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

fn print_line(id: usize, name: &str, outcome: &Outcome, secs: f64) {
    match outcome {
        Ok(detail) => println!("PASS criterion {id:>2} {name}: {detail} [{secs:.1}s]"),
        Err(why) => println!("FAIL criterion {id:>2} {name}: {why} [{secs:.1}s]"),
    }
}
