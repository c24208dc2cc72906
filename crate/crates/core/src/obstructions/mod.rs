//! Necessary conditions for a symmetric involution to fit a graph, with checkable
//! certificates when a condition fails.

mod certificate;
mod chain;
mod filters;
mod parity;
mod twin;

pub use certificate::{required_edges, verify_certificate, Certificate, ParityForcing};
pub use chain::{run_filter_chain, FilterReport, Stage, StageOutcome, StageResult};
pub use filters::{check_edge_bound, check_independence_bound, check_unique_path2};
pub use parity::{parity_obstruction, parity_obstruction_all};
pub use twin::{bipartite_twin_obstruction, bipartite_twin_obstruction_all, TwinOutcome};
