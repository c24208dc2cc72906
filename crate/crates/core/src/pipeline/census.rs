//! The diameter-2 census of connected 4-regular graphs.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{enumerate_regular, Graph, GraphError};
use crate::obstructions::{check_edge_bound, check_unique_path2};

use super::classify::{classify, ClassifyConfig};
use super::record::{ClassificationRecord, Status};

pub const CENSUS_SCHEMA: &str = "qtwo.census/1";

/// Wall-clock data lives only here so the records stay reproducible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub version: String,
    pub seed: u64,
    pub elapsed_ms: f64,
}

impl ReportHeader {
    pub(crate) fn new(seed: u64, start: Instant) -> Self {
        ReportHeader {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderCounts {
    pub n: usize,
    /// Connected 4-regular graphs.
    pub connected: usize,
    pub diameter2: usize,
    pub survivors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: String,
    pub header: ReportHeader,
    pub counts: Vec<OrderCounts>,
    pub survivors: Vec<ClassificationRecord>,
}

impl CensusReport {
    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.survivors.iter().find(|r| r.id == id).map(|r| r.status)
    }

    /// One row per survivor: id, n, graph6, status, evidence.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,n,graph6,status,evidence\n");
        for r in &self.survivors {
            let evidence = match (&r.witness, &r.certificate, &r.citation) {
                (Some(w), _, _) => format!("witness: {} (residual {:.1e})", w.method, w.residual),
                (_, Some(c), _) => format!("certificate: {}", c.kind()),
                (_, _, Some(c)) => c.clone(),
                _ => r.note.clone().unwrap_or_default(),
            };
            out.push_str(&format!("{},{},{},{},\"{}\"\n", r.id, r.n, r.graph6, r.status.label(), evidence.replace('"', "'")));
        }
        out
    }
}

/// Diameter-2 connected 4-regular graphs on `n` vertices with no unique path of length 2 and
/// enough edges, plus the per-order counts.
pub fn diameter2_survivors(n: usize) -> Result<(OrderCounts, Vec<Graph>), GraphError> {
    let mut counts = OrderCounts { n, connected: 0, diameter2: 0, survivors: 0 };
    let mut keep = Vec::new();
    for g in enumerate_regular(n, 4, true)? {
        counts.connected += 1;
        if g.diameter() != Some(2) {
            continue;
        }
        counts.diameter2 += 1;
        if check_unique_path2(&g).is_none() && check_edge_bound(&g).is_none() {
            keep.push(g);
        }
    }
    counts.survivors = keep.len();
    Ok((counts, keep))
}

/// Enumerates orders 6 through 10, keeps the survivors, and classifies them in parallel.
/// Survivors are named after their catalog match and sorted by `(n, id)`.
pub fn run_diameter2_census(cfg: &ClassifyConfig) -> Result<CensusReport, GraphError> {
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut graphs = Vec::new();
    for n in 6..=10 {
        let (c, g) = diameter2_survivors(n)?;
        counts.push(c);
        graphs.extend(g);
    }
    Ok(classify_survivors(graphs, counts, cfg, start))
}

pub(crate) fn classify_survivors(
    graphs: Vec<Graph>,
    counts: Vec<OrderCounts>,
    cfg: &ClassifyConfig,
    start: Instant,
) -> CensusReport {
    let mut survivors: Vec<ClassificationRecord> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut r = classify(g, format!("survivor-{i}"), cfg);
            if let Some(m) = &r.catalog_match {
                r.id = m.name.clone();
            }
            r
        })
        .collect();
    survivors.sort_by(|a, b| (a.n, &a.id, &a.graph6).cmp(&(b.n, &b.id, &b.graph6)));
    CensusReport {
        schema: CENSUS_SCHEMA.to_string(),
        header: ReportHeader::new(cfg.seed(), start),
        counts,
        survivors,
    }
}
