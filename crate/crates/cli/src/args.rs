use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "mps", version, about = "Multipath spanner toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a random graph or a named fixture as an edge list
    Gen(GenArgs),
    /// Build a spanner of an input graph
    Build(BuildArgs),
    /// Check a spanner against its graph; exit 1 on any violation
    Verify(VerifyArgs),
    /// Run a distributed protocol in the LOCAL simulator
    Sim(SimArgs),
    /// Print CSV tables for plotting
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    Fig1,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    /// Edge probability
    #[arg(long, default_value_t = 0.1)]
    pub p: f64,
    #[arg(long, default_value_t = 1)]
    pub wmin: u64,
    #[arg(long, default_value_t = 1)]
    pub wmax: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Patch the graph so it is 2-connected
    #[arg(long)]
    pub biconnected: bool,
    #[arg(long, value_enum)]
    pub fixture: Option<Fixture>,
    /// Fixture stretch parameter
    #[arg(long)]
    pub s: Option<u64>,
    /// Output file; for fixtures, the prefix of `<o>.g.el`, `<o>.h.el`, `<o>.uv.json`
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildAlgo {
    GreedyHop,
    ClusterHop,
    Ft,
    Pipeline,
    Bipath,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopAlgo {
    GreedyHop,
    ClusterHop,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub algo: BuildAlgo,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Number of disjoint paths (pipeline)
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    /// Vertex fault budget (ft)
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Repetition constant of the fault-tolerance wrapper
    #[arg(long, default_value_t = mps_core::ft::DEFAULT_REPEAT_CONSTANT)]
    pub c: f64,
    /// Sampling constant of the cluster hop spanner
    #[arg(long, default_value_t = mps_core::hop::DEFAULT_SAMPLING_CONSTANT)]
    pub hop_c: f64,
    /// Hop spanner used inside ft and pipeline
    #[arg(long, value_enum, default_value_t = HopAlgo::ClusterHop)]
    pub inner: HopAlgo,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Use the tree from the graph at loop entry instead of the working graph (bipath)
    #[arg(long)]
    pub frozen_spst: bool,
    /// Also compute the exact worst stretch (all pairs; slow on large graphs)
    #[arg(long)]
    pub measure: bool,
    /// Reject repeated vertex pairs in the input instead of keeping the lightest
    #[arg(long)]
    pub strict: bool,
    /// Spanner output; defaults to `<input>.<algo>.el`
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
    /// Summary JSON output; defaults to `<out>.summary.json`
    #[arg(long)]
    pub summary: Option<PathBuf>,
    /// Iteration trace output for bipath; defaults to `<out>.trace.jsonl`
    #[arg(long)]
    pub trace: Option<PathBuf>,
    pub input: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyKind {
    Multipath,
    Hop,
    Ft,
    Certificate,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub kind: VerifyKind,
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    /// Multiplicative stretch, as an integer, decimal or fraction
    #[arg(long, default_value = "1")]
    pub alpha: String,
    /// Additive stretch
    #[arg(long, default_value_t = 0)]
    pub beta: u64,
    /// Hop limit (hop)
    #[arg(long, default_value_t = 3)]
    pub b: usize,
    /// Stretch for hop and ft checks
    #[arg(long, default_value = "3")]
    pub s: String,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Certificate parameter
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long)]
    pub strict: bool,
    /// CSV report; defaults to `<h>.verify.csv`
    #[arg(long)]
    pub report: Option<PathBuf>,
    pub g: PathBuf,
    pub h: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProtocolId {
    Null,
    Flood,
    Cluster,
    FtCluster,
}

#[derive(Args, Debug)]
pub struct SimArgs {
    #[arg(long, value_enum)]
    pub protocol: ProtocolId,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Number of disjoint paths; the fault budget is p - 1 (ft-cluster)
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long, default_value_t = mps_core::ft::DEFAULT_REPEAT_CONSTANT)]
    pub c: f64,
    #[arg(long, default_value_t = mps_core::hop::DEFAULT_SAMPLING_CONSTANT)]
    pub hop_c: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Flood source
    #[arg(long, default_value_t = 0)]
    pub source: usize,
    /// Flood depth
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
    /// Round budget; defaults to 3k for cluster protocols and depth + 1 for flood
    #[arg(long)]
    pub max_rounds: Option<usize>,
    #[arg(long)]
    pub strict: bool,
    /// Output edges; defaults to `<input>.<protocol>.el`
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
    /// Round trace CSV; defaults to `<out>.rounds.csv`
    #[arg(long)]
    pub trace: Option<PathBuf>,
    pub input: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Greedy hop spanner size against n^(1+1/k)
    GreedySize,
    /// Cluster hop spanner size against k n^(1+1/k) ln^(1-1/k) n
    ClusterSize,
    /// Pipeline size against k p^(2-1/k) n^(1+1/k) ln^(2-1/k) n
    PipelineSize,
    /// Per-pair 2-multipath ratios of the bipath spanner
    BipathStretch,
    /// Rounds and messages of the bare and fault-tolerant cluster protocol
    Rounds,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
    pub seeds: Vec<u64>,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    /// Expected degree of the random input graphs
    #[arg(long, default_value_t = 10.0)]
    pub degree: f64,
    #[arg(long, default_value_t = 1)]
    pub wmin: u64,
    #[arg(long, default_value_t = 10)]
    pub wmax: u64,
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}
