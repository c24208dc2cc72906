//! Involution witnesses: exact constructions, the stored matrix catalog and the lifts that
//! produce new witnesses from old ones.

mod candle;
mod catalog;
mod known;
mod lifts;

pub use candle::{candle_matrix, candle_witness, Block, BlockRecipe};
pub use catalog::{catalog_doc, catalog_matrix, verify_catalog, CatalogCheck, CATALOG_MATRICES};
pub use known::{family_witness, known_witness, recognize_and_construct, REFERENCE_GRAPHS};
pub use lifts::{
    bipartite_lift, complete_involution, jdup_lift, jdup_lift_tol, kronecker_3ev, product_lift, product_lift_tol,
    transport, zero_diagonal_orthogonal_5, BipartiteForm,
};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::numlin::{matrix_fits_pattern, verify_involution, InvolutionReport, NumlinError, SymMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WitnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Numlin(#[from] NumlinError),
    #[error("input is not an involution (residual {0:e})")]
    NotInvolution(f64),
    #[error("matrix does not fit the pattern graph")]
    PatternMismatch,
    #[error("block is not orthogonal")]
    NotOrthogonal,
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("unknown witness name `{0}`")]
    UnknownName(String),
    #[error("no construction known for {0}")]
    NoConstruction(String),
    #[error("search failed: {0}")]
    Search(String),
}

/// A matrix claimed to be an involution fitting `graph`, with a note on how it was built.
#[derive(Debug, Clone)]
pub struct Witness {
    pub graph: Graph,
    pub matrix: SymMatrix,
    pub method: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessCheck {
    pub fits: bool,
    pub involution: InvolutionReport,
}

impl WitnessCheck {
    pub fn pass(&self) -> bool {
        self.fits && self.involution.pass
    }
}

impl Witness {
    pub fn new(graph: Graph, matrix: SymMatrix, method: impl Into<String>) -> Self {
        Witness { graph, matrix, method: method.into() }
    }

    pub fn check(&self) -> WitnessCheck {
        WitnessCheck {
            fits: matrix_fits_pattern(&self.matrix, &self.graph).unwrap_or(false),
            involution: verify_involution(&self.matrix),
        }
    }

    /// Fails unless the matrix fits the graph and squares to the identity.
    pub fn verified(self) -> Result<Self, WitnessError> {
        let c = self.check();
        if !c.fits {
            Err(WitnessError::PatternMismatch)
        } else if !c.involution.pass {
            Err(WitnessError::NotInvolution(c.involution.residual))
        } else {
            Ok(self)
        }
    }
}
