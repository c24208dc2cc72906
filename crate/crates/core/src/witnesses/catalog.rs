//! Stored witness matrices, checked against their pattern graphs on first use.

use std::sync::OnceLock;

use serde::Serialize;

use super::WitnessError;
use crate::graph::{catalog_graph, Graph};
use crate::numlin::{
    matrix_fits_pattern, verify_involution, verify_ssp, InvolutionReport, MatrixDoc, SspReport, SymMatrix,
};

/// Names of the stored matrices.
pub const CATALOG_MATRICES: &[&str] = &["M7_1", "M8_2", "M8_3", "M8_4c", "M8_6", "M10_2", "M12_3", "M14_1", "H3"];

const SOURCES: &[(&str, &str)] = &[
    ("M7_1", include_str!("../../catalog/M7_1.json")),
    ("M8_2", include_str!("../../catalog/M8_2.json")),
    ("M8_3", include_str!("../../catalog/M8_3.json")),
    ("M8_4c", include_str!("../../catalog/M8_4c.json")),
    ("M8_6", include_str!("../../catalog/M8_6.json")),
    ("M10_2", include_str!("../../catalog/M10_2.json")),
    ("M12_3", include_str!("../../catalog/M12_3.json")),
    ("M14_1", include_str!("../../catalog/M14_1.json")),
    ("H3", include_str!("../../catalog/H3.json")),
];

struct Loaded {
    doc: MatrixDoc,
    graph: Graph,
}

fn load(text: &str) -> Result<Loaded, WitnessError> {
    let doc = MatrixDoc::from_json(text)?;
    let gname = doc.meta.graph.clone().ok_or_else(|| WitnessError::Parameter("catalog entry without graph".into()))?;
    let graph = catalog_graph(&gname)?;
    if !matrix_fits_pattern(&doc.matrix, &graph)? {
        return Err(WitnessError::PatternMismatch);
    }
    let inv = verify_involution(&doc.matrix);
    if !inv.pass {
        return Err(WitnessError::NotInvolution(inv.residual));
    }
    Ok(Loaded { doc, graph })
}

fn loaded() -> &'static [(&'static str, Result<Loaded, WitnessError>)] {
    static CELL: OnceLock<Vec<(&'static str, Result<Loaded, WitnessError>)>> = OnceLock::new();
    CELL.get_or_init(|| SOURCES.iter().map(|&(name, text)| (name, load(text))).collect())
}

fn entry(name: &str) -> Result<&'static Loaded, WitnessError> {
    let (_, r) = loaded()
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| WitnessError::UnknownName(name.to_string()))?;
    r.as_ref().map_err(Clone::clone)
}

/// Matrix and pattern graph for a stored witness; fails if the entry did not verify on load.
pub fn catalog_matrix(name: &str) -> Result<(SymMatrix, Graph), WitnessError> {
    let e = entry(name)?;
    Ok((e.doc.matrix.clone(), e.graph.clone()))
}

/// The full stored document, including citation and note.
pub fn catalog_doc(name: &str) -> Result<MatrixDoc, WitnessError> {
    Ok(entry(name)?.doc.clone())
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogCheck {
    pub name: String,
    pub graph: String,
    pub exact: bool,
    pub fits: bool,
    pub involution: Option<InvolutionReport>,
    pub ssp: Option<SspReport>,
    pub error: Option<String>,
}

impl CatalogCheck {
    pub fn pass(&self) -> bool {
        self.fits && self.involution.as_ref().is_some_and(|r| r.pass) && self.ssp.as_ref().is_none_or(|s| s.holds())
    }
}

/// Re-parses every stored matrix and replays the pattern and involution checks from scratch.
/// `M7_1` additionally gets the strong spectral property check.
pub fn verify_catalog() -> Vec<CatalogCheck> {
    SOURCES
        .iter()
        .map(|&(name, text)| {
            let mut c = CatalogCheck {
                name: name.to_string(),
                graph: String::new(),
                exact: false,
                fits: false,
                involution: None,
                ssp: None,
                error: None,
            };
            let doc = match MatrixDoc::from_json(text) {
                Ok(d) => d,
                Err(e) => {
                    c.error = Some(e.to_string());
                    return c;
                }
            };
            c.graph = doc.meta.graph.clone().unwrap_or_default();
            c.exact = doc.matrix.is_exact();
            let g = match catalog_graph(&c.graph) {
                Ok(g) => g,
                Err(e) => {
                    c.error = Some(e.to_string());
                    return c;
                }
            };
            c.fits = matrix_fits_pattern(&doc.matrix, &g).unwrap_or(false);
            c.involution = Some(verify_involution(&doc.matrix));
            if name == "M7_1" {
                match verify_ssp(&doc.matrix, &g) {
                    Ok(r) => c.ssp = Some(r),
                    Err(e) => c.error = Some(e.to_string()),
                }
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_verify() {
        for c in verify_catalog() {
            assert!(c.pass(), "{c:?}");
            assert!(c.involution.as_ref().unwrap().residual <= 1e-10);
            assert_eq!(c.exact, c.name != "M12_3", "{}", c.name);
        }
        for name in CATALOG_MATRICES {
            catalog_matrix(name).unwrap();
        }
        assert!(matches!(catalog_matrix("M9_1"), Err(WitnessError::UnknownName(_))));
    }

    #[test]
    fn golden_ratio_entries() {
        let (m, g) = catalog_matrix("M8_2").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(m.as_exact().unwrap().field(), vec![5]);
    }

    #[test]
    fn seven_vertex_matrix_sits_on_deleted_pattern() {
        let (_, g) = catalog_matrix("M7_1").unwrap();
        assert_eq!(g.edge_count(), 13);
        assert!(!g.has_edge(0, 6));
        let doc = catalog_doc("M7_1").unwrap();
        assert!(doc.meta.note.unwrap().contains("{1,7}"));
    }
}
