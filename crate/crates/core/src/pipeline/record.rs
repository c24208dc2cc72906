//! Per-graph classification records and their independent re-verification.

use serde::{Deserialize, Serialize};

use crate::graph::{parse_graph6, to_graph6, Graph, Isomorphism};
use crate::numlin::{
    distinct_eigenvalue_count, eigenvalue_clusters, matrix_fits_pattern, verify_involution, MatrixDoc, MatrixMeta,
    SymMatrix, EIGEN_TOL,
};
use crate::obstructions::{verify_certificate, Certificate, FilterReport};

pub const RECORD_SCHEMA: &str = "qtwo.record/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "q=2")]
    QTwo,
    #[serde(rename = "q>2")]
    QAbove,
    #[serde(rename = "unknown")]
    Unknown,
    #[serde(rename = "asserted")]
    Asserted,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::QTwo => "q=2",
            Status::QAbove => "q>2",
            Status::Unknown => "unknown",
            Status::Asserted => "asserted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub method: String,
    pub residual: f64,
    pub exact: bool,
    /// The matrix in the stored matrix format.
    pub matrix: serde_json::Value,
}

impl WitnessRecord {
    pub fn new(m: &SymMatrix, g: &Graph, method: impl Into<String>) -> Self {
        let doc = MatrixDoc {
            meta: MatrixMeta { graph: Some(format!("g6:{}", to_graph6(g))), ..MatrixMeta::default() },
            matrix: m.clone(),
        };
        WitnessRecord {
            method: method.into(),
            residual: verify_involution(m).residual,
            exact: m.is_exact(),
            matrix: doc.to_value().expect("finite entries"),
        }
    }

    pub fn matrix(&self) -> Result<SymMatrix, String> {
        MatrixDoc::from_value(self.matrix.clone()).map(|d| d.matrix).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogMatch {
    pub name: String,
    /// Image of each catalog vertex in the classified graph.
    pub map: Vec<usize>,
}

/// A matrix with exactly three distinct eigenvalues, attached where `q ≤ 3` is shown.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThreeEigenvalues {
    pub method: String,
    pub eigenvalues: Vec<(f64, usize)>,
    pub matrix: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub schema: String,
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub r: Option<usize>,
    pub diameter: Option<usize>,
    pub filters: Option<FilterReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessRecord>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub citation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub catalog_match: Option<CatalogMatch>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub three_eigenvalues: Option<ThreeEigenvalues>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl ClassificationRecord {
    pub fn graph(&self) -> Result<Graph, String> {
        parse_graph6(&self.graph6).map_err(|e| e.to_string())
    }

    /// Checks the record from its serialized content alone: statuses must carry the evidence
    /// they require, and that evidence must verify against the graph.
    pub fn reverify(&self) -> Result<(), String> {
        let g = self.graph()?;
        if g.order() != self.n {
            return Err(format!("n = {} but graph6 has {} vertices", self.n, g.order()));
        }
        if let Some(w) = &self.witness {
            let m = w.matrix()?;
            if !matrix_fits_pattern(&m, &g).map_err(|e| e.to_string())? {
                return Err("witness does not fit the graph".into());
            }
            let rep = verify_involution(&m);
            if !rep.pass {
                return Err(format!("witness residual {:e}", rep.residual));
            }
        }
        if let Some(c) = &self.certificate {
            verify_certificate(c, &g)?;
        }
        if let Some(t) = &self.three_eigenvalues {
            let m = MatrixDoc::from_value(t.matrix.clone()).map_err(|e| e.to_string())?.matrix;
            if !matrix_fits_pattern(&m, &g).map_err(|e| e.to_string())? {
                return Err("three-eigenvalue matrix does not fit the graph".into());
            }
            if distinct_eigenvalue_count(&m, EIGEN_TOL).map_err(|e| e.to_string())? != 3 {
                return Err("attached matrix does not have three distinct eigenvalues".into());
            }
        }
        if let Some(cm) = &self.catalog_match {
            let h = crate::graph::catalog_graph(&cm.name)
                .or_else(|_| cm.name.parse::<Graph>())
                .map_err(|e| e.to_string())?;
            if !(Isomorphism { map: cm.map.clone() }).verify(&h, &g) {
                return Err(format!("stored map is not an isomorphism from {}", cm.name));
            }
        }
        match self.status {
            Status::QTwo if self.witness.is_none() => Err("q=2 without a witness".into()),
            Status::QAbove if self.certificate.is_none() => Err("q>2 without a certificate".into()),
            Status::Asserted if self.citation.is_none() => Err("asserted status without a citation".into()),
            _ => Ok(()),
        }
    }
}

pub(crate) fn three_eigenvalue_record(m: &SymMatrix, g: &Graph, method: &str) -> ThreeEigenvalues {
    let doc = MatrixDoc {
        meta: MatrixMeta { graph: Some(format!("g6:{}", to_graph6(g))), ..MatrixMeta::default() },
        matrix: m.clone(),
    };
    ThreeEigenvalues {
        method: method.into(),
        eigenvalues: eigenvalue_clusters(m, EIGEN_TOL).unwrap_or_default(),
        matrix: doc.to_value().expect("finite entries"),
    }
}
