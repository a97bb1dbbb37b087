use std::path::Path;

use anyhow::Result;
use mps_core::pipeline::{stretch_json, BuildSummary};
use mps_core::{
    bipath_spanner_with, ft_hop_spanner, multipath_spanner, verify_stretch, write_edge_list, Cost, FtParams,
    HopAlgorithm, HopSpannerParams, PipelineParams, SpstSource, Stretch, Subgraph, WeightedGraph,
};
use serde_json::{json, Value};

use crate::args::{BuildAlgo, BuildArgs, HopAlgo};
use crate::io::{self, EXIT_OK};

fn algo_id(a: BuildAlgo) -> &'static str {
    match a {
        BuildAlgo::GreedyHop => "greedy-hop",
        BuildAlgo::ClusterHop => "cluster-hop",
        BuildAlgo::Ft => "ft",
        BuildAlgo::Pipeline => "pipeline",
        BuildAlgo::Bipath => "bipath",
    }
}

fn hop_algorithm(a: HopAlgo) -> HopAlgorithm {
    match a {
        HopAlgo::GreedyHop => HopAlgorithm::Greedy,
        HopAlgo::ClusterHop => HopAlgorithm::Cluster,
    }
}

struct Built {
    h: Subgraph,
    /// Path count the declared stretch refers to.
    p: usize,
    alpha: Value,
    /// Multiplicative part used when measuring.
    measure_p: usize,
    params: String,
}

pub fn run(a: &BuildArgs) -> Result<i32> {
    let g = io::read_graph(&a.input, a.strict)?;
    let hop = HopSpannerParams::new(a.k).with_seed(a.seed).with_c(a.hop_c);
    let id = algo_id(a.algo);
    let out = a
        .out
        .clone()
        .unwrap_or_else(|| io::sibling(&a.input, &format!(".{id}.el")));
    let built = build(&g, a, &hop, &out)?;

    let header = format!(
        "mps build --algo {id} {} from {}",
        built.params,
        a.input.display()
    );
    io::write(&out, &write_edge_list(&built.h.to_graph(), &[header]))?;

    let worst_ratio = if a.measure {
        let report = verify_stretch(
            &g,
            &built.h,
            built.measure_p,
            Stretch::from_integer(1),
            Cost::ZERO,
        )?;
        Some(report.worst_ratio.to_f64())
    } else {
        None
    };
    let summary = BuildSummary {
        n: g.n(),
        m_g: g.edge_count(),
        m_h: built.h.edge_count(),
        p: built.p,
        k: a.k,
        alpha_declared: built.alpha,
        worst_ratio,
        seed: a.seed,
    };
    let text = io::print_json(&summary)?;
    let summary_path = a
        .summary
        .clone()
        .unwrap_or_else(|| io::sibling(&out, ".summary.json"));
    io::write(&summary_path, &format!("{text}\n"))?;
    Ok(EXIT_OK)
}

fn build(g: &WeightedGraph, a: &BuildArgs, hop: &HopSpannerParams, out_path: &Path) -> Result<Built> {
    let hop_stretch = || json!(2 * a.k as u64 - 1);
    Ok(match a.algo {
        BuildAlgo::GreedyHop | BuildAlgo::ClusterHop => {
            let alg = if a.algo == BuildAlgo::GreedyHop {
                HopAlgorithm::Greedy
            } else {
                HopAlgorithm::Cluster
            };
            let params = match alg {
                HopAlgorithm::Greedy => format!("--k {}", a.k),
                HopAlgorithm::Cluster => format!("--k {} --hop-c {} --seed {}", a.k, a.hop_c, a.seed),
            };
            Built {
                h: alg.run(g, hop)?,
                p: 1,
                alpha: hop_stretch(),
                measure_p: 1,
                params,
            }
        }
        BuildAlgo::Ft => {
            let inner = hop_algorithm(a.inner);
            let ft = FtParams::new(a.r, a.seed).with_c(a.c);
            Built {
                h: ft_hop_spanner(g, &ft, inner, hop)?,
                p: a.r + 1,
                alpha: hop_stretch(),
                measure_p: 1,
                params: format!(
                    "--inner {} --k {} --r {} --c {} --hop-c {} --seed {}",
                    inner.id(),
                    a.k,
                    a.r,
                    a.c,
                    a.hop_c,
                    a.seed
                ),
            }
        }
        BuildAlgo::Pipeline => {
            let mut params = PipelineParams::new(a.p, a.k, a.seed).with_algorithm(hop_algorithm(a.inner));
            params.hop_c = a.hop_c;
            params.ft_c = a.c;
            let out = multipath_spanner(g, &params)?;
            Built {
                h: out.h,
                p: a.p,
                alpha: stretch_json(out.declared_stretch),
                measure_p: a.p,
                params: format!(
                    "--inner {} --p {} --k {} --c {} --hop-c {} --seed {}",
                    params.algorithm.id(),
                    a.p,
                    a.k,
                    a.c,
                    a.hop_c,
                    a.seed
                ),
            }
        }
        BuildAlgo::Bipath => {
            let source = if a.frozen_spst {
                SpstSource::Frozen
            } else {
                SpstSource::Current
            };
            let out = bipath_spanner_with(g, source)?;
            let trace = a
                .trace
                .clone()
                .unwrap_or_else(|| io::sibling(out_path, ".trace.jsonl"));
            io::write(&trace, &out.trace.to_jsonl())?;
            Built {
                h: out.h,
                p: 2,
                alpha: json!({ "alpha": 2, "beta": 24 * g.max_weight() }),
                measure_p: 2,
                params: format!("--spst {}", if a.frozen_spst { "frozen" } else { "current" }),
            }
        }
    })
}
