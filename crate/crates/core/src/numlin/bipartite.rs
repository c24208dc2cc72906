//! Block decomposition of matrices whose pattern is a bipartite graph.

use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::One;

use super::matrix::{matrix_fits_pattern, SymMatrix};
use super::quad::QuadElem;
use super::NumlinError;
use crate::graph::Graph;

/// Rectangular cross block `B` between the two parts.
#[derive(Debug, Clone, PartialEq)]
pub enum CrossBlock {
    Float(DMatrix<f64>),
    /// `√scale_sq · entries`.
    Exact { entries: Vec<Vec<QuadElem>>, scale_sq: BigRational },
}

impl CrossBlock {
    pub fn exact(entries: Vec<Vec<QuadElem>>) -> Self {
        CrossBlock::Exact { entries, scale_sq: BigRational::one() }
    }

    pub fn rows(&self) -> usize {
        match self {
            CrossBlock::Float(m) => m.nrows(),
            CrossBlock::Exact { entries, .. } => entries.len(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            CrossBlock::Float(m) => m.ncols(),
            CrossBlock::Exact { entries, .. } => entries.first().map_or(0, Vec::len),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, CrossBlock::Exact { .. })
    }

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        match self {
            CrossBlock::Float(m) => m.clone(),
            CrossBlock::Exact { entries, scale_sq } => {
                let s = num_traits::ToPrimitive::to_f64(scale_sq).unwrap_or(f64::NAN).sqrt();
                DMatrix::from_fn(self.rows(), self.cols(), |i, j| s * entries[i][j].to_f64())
            }
        }
    }

    pub fn transpose(&self) -> CrossBlock {
        match self {
            CrossBlock::Float(m) => CrossBlock::Float(m.transpose()),
            CrossBlock::Exact { entries, scale_sq } => CrossBlock::Exact {
                entries: (0..self.cols())
                    .map(|j| (0..self.rows()).map(|i| entries[i][j].clone()).collect())
                    .collect(),
                scale_sq: scale_sq.clone(),
            },
        }
    }

    /// Exact inner products of rows `(a, b)`, unscaled.
    fn exact_row_dot(entries: &[Vec<QuadElem>], a: usize, b: usize) -> QuadElem {
        let mut acc = QuadElem::zero();
        for (x, y) in entries[a].iter().zip(&entries[b]) {
            if !x.is_zero() && !y.is_zero() {
                acc += &(x * y);
            }
        }
        acc
    }

    fn rows_orthogonal(&self, tol: f64) -> bool {
        match self {
            CrossBlock::Exact { entries, .. } => (0..entries.len())
                .all(|a| (a + 1..entries.len()).all(|b| Self::exact_row_dot(entries, a, b).is_zero())),
            CrossBlock::Float(m) => (0..m.nrows()).all(|a| {
                (a + 1..m.nrows()).all(|b| {
                    let (ra, rb) = (m.row(a), m.row(b));
                    ra.dot(&rb).abs() <= tol * (ra.norm() * rb.norm()).max(1.0)
                })
            }),
        }
    }

    /// `BᵀB = I` (which for a square block also gives `BBᵀ = I`).
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        if self.rows() != self.cols() {
            return false;
        }
        match self {
            CrossBlock::Exact { entries, scale_sq } => {
                let t = self.transpose();
                let CrossBlock::Exact { entries: cols, .. } = &t else { unreachable!() };
                let target = QuadElem::from_rational(BigRational::one() / scale_sq);
                (0..cols.len()).all(|a| {
                    (a..cols.len()).all(|b| {
                        let v = Self::exact_row_dot(cols, a, b);
                        if a == b { v == target } else { v.is_zero() }
                    })
                }) && !entries.is_empty()
            }
            CrossBlock::Float(m) => {
                let n = m.ncols();
                (m.transpose() * m - DMatrix::<f64>::identity(n, n)).amax() <= tol
            }
        }
    }
}

/// True iff all distinct row pairs and all distinct column pairs of `b` are orthogonal
/// (exactly in exact mode, relative to the row norms within `tol` in float mode).
pub fn check_pairwise_orthogonal_rows_cols(b: &CrossBlock, tol: f64) -> bool {
    b.rows_orthogonal(tol) && b.transpose().rows_orthogonal(tol)
}

/// `M = [[C, B], [Bᵀ, D]]` with respect to a bipartition of the pattern graph.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteSplit {
    /// The part containing vertex 0.
    pub p1: Vec<usize>,
    pub p2: Vec<usize>,
    /// Diagonal of the `P1` block.
    pub c: Vec<f64>,
    /// Diagonal of the `P2` block.
    pub d: Vec<f64>,
    /// Rows indexed by `P1`, columns by `P2`.
    pub b: CrossBlock,
    pub equal_parts: bool,
}

pub fn bipartite_split(m: &SymMatrix, g: &Graph) -> Result<BipartiteSplit, NumlinError> {
    if !matrix_fits_pattern(m, g)? {
        return Err(NumlinError::PatternMismatch);
    }
    let side = g.bipartition().ok_or(NumlinError::NotBipartite)?;
    let p1: Vec<usize> = (0..g.order()).filter(|&v| !side[v]).collect();
    let p2: Vec<usize> = (0..g.order()).filter(|&v| side[v]).collect();
    let fm = m.to_dmatrix();
    let c = p1.iter().map(|&v| fm[(v, v)]).collect();
    let d = p2.iter().map(|&v| fm[(v, v)]).collect();
    let b = match m {
        SymMatrix::Float(_) => CrossBlock::Float(DMatrix::from_fn(p1.len(), p2.len(), |i, j| fm[(p1[i], p2[j])])),
        SymMatrix::Exact(e) => CrossBlock::Exact {
            entries: p1
                .iter()
                .map(|&u| p2.iter().map(|&v| e.entries.get(u, v).clone()).collect())
                .collect(),
            scale_sq: e.scale_sq.clone(),
        },
    };
    let equal_parts = p1.len() == p2.len();
    Ok(BipartiteSplit { p1, p2, c, d, b, equal_parts })
}
