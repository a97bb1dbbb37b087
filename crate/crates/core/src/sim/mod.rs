//! Synchronous LOCAL-model simulation.

mod basic;
mod cluster;
mod ft;
mod harness;
mod trace;

pub use basic::{FloodProtocol, FloodState, NullProtocol};
pub use cluster::{protocol_cluster_spanner, ClusterMsg, ClusterNode, ClusterProtocol};
pub use ft::{protocol_ft_wrapper, FtState, FtWrapper};
pub use harness::{run_protocol, LocalView, Protocol};
pub use trace::{RoundStats, RoundTrace};
