use anyhow::Result;
use mps_core::sim::{FloodProtocol, NullProtocol};
use mps_core::{
    protocol_cluster_spanner, protocol_ft_wrapper, run_protocol, write_edge_list, Error, Protocol,
    RoundTrace, Subgraph, WeightedGraph,
};
use serde_json::json;

use crate::args::{ProtocolId, SimArgs};
use crate::io::{self, EXIT_OK, EXIT_VIOLATION};

fn protocol_id(p: ProtocolId) -> &'static str {
    match p {
        ProtocolId::Null => "null",
        ProtocolId::Flood => "flood",
        ProtocolId::Cluster => "cluster",
        ProtocolId::FtCluster => "ft-cluster",
    }
}

pub fn run(a: &SimArgs) -> Result<i32> {
    let g = io::read_graph(&a.input, a.strict)?;
    let id = protocol_id(a.protocol);
    let budget = a.max_rounds.unwrap_or(match a.protocol {
        ProtocolId::Null => 1,
        ProtocolId::Flood => a.depth + 1,
        ProtocolId::Cluster | ProtocolId::FtCluster => 3 * a.k,
    });
    let outcome = match a.protocol {
        ProtocolId::Null => simulate(&g, &NullProtocol, budget, a.seed),
        ProtocolId::Flood => {
            g.check_vertex(a.source)?;
            let flood = FloodProtocol {
                source: a.source,
                depth: a.depth,
            };
            simulate(&g, &flood, budget, a.seed)
        }
        ProtocolId::Cluster => simulate(&g, &protocol_cluster_spanner(a.k, a.hop_c), budget, a.seed),
        ProtocolId::FtCluster => {
            if a.p < 1 {
                return Err(Error::InvalidParameter("p must be at least 1".into()).into());
            }
            let wrapped = protocol_ft_wrapper(protocol_cluster_spanner(a.k, a.hop_c), a.p - 1, a.c);
            simulate(&g, &wrapped, budget, a.seed)
        }
    }?;

    let out = a
        .out
        .clone()
        .unwrap_or_else(|| io::sibling(&a.input, &format!(".{id}.el")));
    let trace_path = a
        .trace
        .clone()
        .unwrap_or_else(|| io::sibling(&out, ".rounds.csv"));
    io::write(&trace_path, &outcome.trace.to_csv())?;
    if let Some(h) = &outcome.h {
        let header = format!(
            "mps sim --protocol {id} --k {} --p {} --seed {} from {}",
            a.k,
            a.p,
            a.seed,
            a.input.display()
        );
        io::write(&out, &write_edge_list(&h.to_graph(), &[header]))?;
    }
    io::print_json(&json!({
        "protocol": id,
        "budget": budget,
        "within_budget": outcome.h.is_some(),
        "rounds_used": outcome.trace.rounds_used,
        "messages": outcome.trace.total_messages(),
        "payload_units": outcome.trace.total_payload(),
        "m_H": outcome.h.as_ref().map(Subgraph::edge_count),
        "seed": a.seed,
    }))?;
    Ok(if outcome.h.is_some() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

struct Outcome {
    /// `None` when the round budget was exceeded.
    h: Option<Subgraph>,
    trace: RoundTrace,
}

fn simulate<P: Protocol>(g: &WeightedGraph, p: &P, budget: usize, seed: u64) -> Result<Outcome> {
    match run_protocol(g, p, budget, seed) {
        Ok((h, trace)) => Ok(Outcome { h: Some(h), trace }),
        Err(Error::RoundBudget { partial, .. }) => Ok(Outcome {
            h: None,
            trace: *partial,
        }),
        Err(e) => Err(e.into()),
    }
}
