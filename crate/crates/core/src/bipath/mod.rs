//! Bipath spanners: sparse subgraphs preserving the cheapest pair of
//! internally disjoint paths within a factor 2 plus an additive term.

mod algo;
mod certificate;
mod spst;
mod suurballe;

pub use algo::{bipath_spanner, bipath_spanner_with, BipathIteration, BipathOutput, BipathTrace, SpstSource};
pub use certificate::{residual_sparsity_certificate, BallRemoval, CertificateReport};
pub use spst::{spst2, Spst2};
pub use suurballe::{suurballe_all, suurballe_pair, Digraph, DipathPair};
