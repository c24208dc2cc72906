//! Classification runs, reports and the command-line front end.

mod census;
mod classify;
pub mod cli;
mod record;
mod theorem;

pub use census::{diameter2_survivors, run_diameter2_census, CensusReport, OrderCounts, ReportHeader, CENSUS_SCHEMA};
pub use classify::{catalog_match, classify, ClassifyConfig, ASSERTED};
pub use record::{
    CatalogMatch, ClassificationRecord, Status, ThreeEigenvalues, WitnessRecord, RECORD_SCHEMA,
};
pub use theorem::{verify_theorem_list, IsoCheck, ListedGraph, TheoremReport, LISTED, THEOREM_SCHEMA};

use crate::graph::{parse_graph6, Graph, GraphError};

/// Resolves `g6:<graph6>` or a family/catalog name such as `R10_3` or `H:7`.
pub fn resolve_graph(text: &str) -> Result<Graph, GraphError> {
    match text.strip_prefix("g6:") {
        Some(g6) => parse_graph6(g6),
        None => text.parse(),
    }
}
