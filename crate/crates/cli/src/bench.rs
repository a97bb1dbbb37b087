use std::fmt::Write as _;

use anyhow::Result;
use mps_core::graph::RandomGraphSpec;
use mps_core::pipeline::size_reference;
use mps_core::{
    bipath_spanner, cluster_hop_spanner, gen_random, greedy_hop_spanner, multipath_spanner,
    protocol_cluster_spanner, protocol_ft_wrapper, run_protocol, verify_stretch, Cost, PipelineParams,
    Stretch, WeightedGraph,
};

use crate::args::{BenchArgs, Suite};
use crate::io::{self, EXIT_OK};

pub fn run(a: &BenchArgs) -> Result<i32> {
    let table = match a.suite {
        Suite::GreedySize => size_table(
            a,
            |g, _| Ok(greedy_hop_spanner(g, a.k)?.edge_count()),
            |n| n.powf(1.0 + 1.0 / a.k as f64),
        )?,
        Suite::ClusterSize => size_table(
            a,
            |g, seed| {
                Ok(cluster_hop_spanner(g, a.k, mps_core::hop::DEFAULT_SAMPLING_CONSTANT, seed)?.edge_count())
            },
            |n| {
                let k = a.k as f64;
                k * n.powf(1.0 + 1.0 / k) * n.ln().powf(1.0 - 1.0 / k)
            },
        )?,
        Suite::PipelineSize => size_table(
            a,
            |g, seed| {
                Ok(multipath_spanner(g, &PipelineParams::new(a.p, a.k, seed))?
                    .h
                    .edge_count())
            },
            |n| size_reference(n as usize, a.p, a.k),
        )?,
        Suite::BipathStretch => bipath_table(a)?,
        Suite::Rounds => rounds_table(a)?,
    };
    match &a.out {
        Some(path) => io::write(path, &table)?,
        None => io::print_stdout(&table),
    }
    Ok(EXIT_OK)
}

fn graph(a: &BenchArgs, n: usize, seed: u64) -> Result<WeightedGraph> {
    let edge_prob = if n > 1 {
        (a.degree / (n - 1) as f64).min(1.0)
    } else {
        0.0
    };
    Ok(gen_random(&RandomGraphSpec {
        n,
        edge_prob,
        weight_range: (a.wmin, a.wmax),
        seed,
    })?)
}

/// One row per size: the spanner size averaged over seeds, and the reference bound.
fn size_table(
    a: &BenchArgs,
    size: impl Fn(&WeightedGraph, u64) -> Result<usize>,
    bound: impl Fn(f64) -> f64,
) -> Result<String> {
    let mut out = String::from("n,m_H,bound\n");
    for &n in &a.sizes {
        let mut total = 0;
        for &seed in &a.seeds {
            total += size(&graph(a, n, seed)?, seed)?;
        }
        let mean = total as f64 / a.seeds.len().max(1) as f64;
        writeln!(out, "{n},{mean:.1},{:.1}", bound(n as f64))?;
    }
    Ok(out)
}

fn bipath_table(a: &BenchArgs) -> Result<String> {
    let mut out = String::from("n,seed,u,v,delta_g,delta_h,ratio\n");
    for &n in &a.sizes {
        for &seed in &a.seeds {
            let g = graph(a, n, seed)?;
            let (h, _) = bipath_spanner(&g)?;
            let report = verify_stretch(&g, &h, 2, Stretch::from_integer(1), Cost::ZERO)?;
            for row in &report.rows {
                let ratio = row.ratio().map(|r| r.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{n},{seed},{},{},{},{},{ratio}",
                    row.u, row.v, row.delta_g, row.delta_h
                )?;
            }
        }
    }
    Ok(out)
}

fn rounds_table(a: &BenchArgs) -> Result<String> {
    let mut out = String::from("n,seed,rounds_bare,rounds_ft,messages_bare,messages_ft\n");
    let c = mps_core::hop::DEFAULT_SAMPLING_CONSTANT;
    for &n in &a.sizes {
        for &seed in &a.seeds {
            let g = graph(a, n, seed)?;
            let budget = 3 * a.k;
            let (_, bare) = run_protocol(&g, &protocol_cluster_spanner(a.k, c), budget, seed)?;
            let wrapped = protocol_ft_wrapper(protocol_cluster_spanner(a.k, c), a.p.saturating_sub(1), 1.0);
            let (_, ft) = run_protocol(&g, &wrapped, budget, seed)?;
            writeln!(
                out,
                "{n},{seed},{},{},{},{}",
                bare.rounds_used,
                ft.rounds_used,
                bare.total_messages(),
                ft.total_messages()
            )?;
        }
    }
    Ok(out)
}
