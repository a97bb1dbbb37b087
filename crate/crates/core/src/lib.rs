//! Multipath spanners: sparse subgraphs that keep, for every pair of vertices,
//! a cheap union of `p` internally vertex-disjoint paths.
//!
//! The crate holds the graph model, exact metric oracles, hop spanners, the
//! fault-tolerant wrapper, the end-to-end multipath pipeline, the bipath
//! construction and a synchronous LOCAL-model simulator.

pub mod bipath;
pub mod cost;
pub mod error;
mod flow;
pub mod ft;
pub mod graph;
pub mod hop;
pub mod metrics;
pub mod pipeline;
pub mod seed;
pub mod sim;

pub use bipath::{
    bipath_spanner, bipath_spanner_with, residual_sparsity_certificate, spst2, suurballe_all, suurballe_pair,
    BipathOutput, BipathTrace, CertificateReport, Digraph, Spst2, SpstSource,
};
pub use cost::{parse_stretch, stretch_to_f64, within_stretch, Cost, Stretch, Weight};
pub use error::{Error, Result};
pub use ft::{
    ft_hop_spanner, ft_spanner, verify_fault_tolerance, verify_fault_tolerance_with, FaultGuard, FtParams,
};
pub use graph::{
    bicomponent_of, edge_key, gen_fig1_fixture, gen_random, gen_random_biconnected, load_graph,
    load_graph_with, parse_edge_list, save_graph, save_graph_with_comments, write_edge_list, Bicomponent,
    Edge, Fig1Fixture, ParallelEdges, RandomGraphSpec, Subgraph, VertexId, WeightedGraph,
};
pub use hop::{cluster_hop_spanner, greedy_hop_spanner, is_b_hop_spanner, HopAlgorithm, HopSpannerParams};
pub use metrics::{
    cycle_cost_through_edge, hop_ball, kappa_s, mu_s, multipath_cost, multipath_cost_bruteforce,
    shortest_path_cost, two_ball, verify_stretch, PathSet, StretchReport, StretchValue,
};
pub use pipeline::{
    compute_phi, multipath_spanner, verify_multipath_stretch, BuildSummary, MultipathSpanner, PipelineParams,
};
pub use sim::{protocol_cluster_spanner, protocol_ft_wrapper, run_protocol, LocalView, Protocol, RoundTrace};
