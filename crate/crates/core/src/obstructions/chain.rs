//! The ordered filter chain.

use serde::{Deserialize, Serialize};

use super::certificate::Certificate;
use super::filters::{check_edge_bound, check_independence_bound, check_unique_path2};
use super::parity::parity_obstruction;
use super::twin::{bipartite_twin_obstruction, TwinOutcome};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    EdgeBound,
    UniquePath,
    IndependenceBound,
    Parity,
    BipartiteTwin,
}

impl Stage {
    pub const ORDER: [Stage; 5] =
        [Stage::EdgeBound, Stage::UniquePath, Stage::IndependenceBound, Stage::Parity, Stage::BipartiteTwin];

    pub fn name(self) -> &'static str {
        match self {
            Stage::EdgeBound => "edge_bound",
            Stage::UniquePath => "unique_path",
            Stage::IndependenceBound => "independence_bound",
            Stage::Parity => "parity",
            Stage::BipartiteTwin => "bipartite_twin",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum StageOutcome {
    Pass,
    NotApplicable,
    Skipped { reason: String },
    Fail { certificate: Certificate },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageResult {
    pub stage: Stage,
    pub outcome: StageOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterReport {
    /// Stages that ran, in order; the chain stops after the first failure.
    pub stages: Vec<StageResult>,
    pub fatal: Option<Certificate>,
}

impl FilterReport {
    pub fn passed(&self) -> bool {
        self.fatal.is_none()
    }

    pub fn outcome(&self, stage: Stage) -> Option<&StageOutcome> {
        self.stages.iter().find(|s| s.stage == stage).map(|s| &s.outcome)
    }

    /// The stage that produced the fatal certificate.
    pub fn fatal_stage(&self) -> Option<Stage> {
        self.stages
            .iter()
            .find(|s| matches!(s.outcome, StageOutcome::Fail { .. }))
            .map(|s| s.stage)
    }
}

fn run_stage(g: &Graph, stage: Stage) -> StageOutcome {
    let fail = |c: Option<Certificate>| match c {
        Some(certificate) => StageOutcome::Fail { certificate },
        None => StageOutcome::Pass,
    };
    match stage {
        Stage::EdgeBound => fail(check_edge_bound(g)),
        Stage::UniquePath => fail(check_unique_path2(g)),
        Stage::IndependenceBound => match check_independence_bound(g) {
            Ok(c) => fail(c),
            Err(e) => StageOutcome::Skipped { reason: e.to_string() },
        },
        Stage::Parity => fail(parity_obstruction(g)),
        Stage::BipartiteTwin => match bipartite_twin_obstruction(g) {
            TwinOutcome::NotApplicable => StageOutcome::NotApplicable,
            TwinOutcome::None => StageOutcome::Pass,
            TwinOutcome::Found(mut v) => StageOutcome::Fail { certificate: v.remove(0) },
        },
    }
}

/// Runs edge bound, unique path, independence bound, parity and twin checks in that order,
/// stopping at the first fatal certificate.
pub fn run_filter_chain(g: &Graph) -> FilterReport {
    let mut stages = Vec::new();
    for stage in Stage::ORDER {
        let outcome = run_stage(g, stage);
        let fatal = match &outcome {
            StageOutcome::Fail { certificate } => Some(certificate.clone()),
            _ => None,
        };
        stages.push(StageResult { stage, outcome });
        if fatal.is_some() {
            return FilterReport { stages, fatal };
        }
    }
    FilterReport { stages, fatal: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog_graph, hypercube};

    #[test]
    fn r9_1_stops_at_parity() {
        let r = run_filter_chain(&catalog_graph("R9_1").unwrap());
        assert_eq!(r.fatal_stage(), Some(Stage::Parity));
        assert_eq!(r.stages.len(), 4);
    }

    #[test]
    fn q4_passes_everything() {
        let r = run_filter_chain(&hypercube(4).unwrap());
        assert!(r.passed());
        assert_eq!(r.stages.len(), 5);
        assert!(r.stages.iter().all(|s| s.outcome == StageOutcome::Pass));
    }

    #[test]
    fn report_serializes() {
        let r = run_filter_chain(&catalog_graph("R12_1").unwrap());
        assert_eq!(r.fatal_stage(), Some(Stage::BipartiteTwin));
        let text = serde_json::to_string(&r).unwrap();
        let back: FilterReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(text.contains("\"kind\":\"BipartiteTwin\""));
    }
}
