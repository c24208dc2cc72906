//! Matrices over floats or multi-quadratic fields and the checks run on them.

mod bipartite;
mod json;
mod matrix;
mod quad;
mod ssp;

pub use bipartite::{bipartite_split, check_pairwise_orthogonal_rows_cols, BipartiteSplit, CrossBlock};
pub use json::{MatrixDoc, MatrixMeta, MATRIX_SCHEMA};
pub use matrix::{
    distinct_eigenvalue_count, eigenvalue_clusters, eigenvalues, involution_residual, matrix_fits_pattern,
    verify_involution, verify_involution_tol, ExactMatrix, InvolutionReport, Packed, SymMatrix, EIGEN_TOL,
    INVOLUTION_TOL, PATTERN_ZERO_TOL,
};
pub use quad::{is_square_free, prime_factors, square_free_split, QuadElem};
pub use ssp::{verify_ssp, SspReport, SspVerdict, SSP_FAIL_RATIO, SSP_HOLD_RATIO, SSP_RANK_RATIO};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumlinError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("matrix mixes float and exact entries")]
    MixedModes,
    #[error("matrix does not fit the pattern graph")]
    PatternMismatch,
    #[error("pattern graph is not bipartite")]
    NotBipartite,
    #[error("block is not orthogonal")]
    NotOrthogonal,
    #[error("eigenvalue solver did not converge")]
    NonConvergence,
    #[error("field error: {0}")]
    Field(String),
    #[error("matrix JSON error: {0}")]
    Json(String),
    #[error("i/o error: {0}")]
    Io(String),
}
