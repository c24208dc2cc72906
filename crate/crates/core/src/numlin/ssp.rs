//! Strong Spectral Property check.
//!
//! `M` has the SSP when the only symmetric `X` with zero diagonal, zero on the edges of the
//! pattern, and `MX = XM` is `X = 0`. The unknowns are the non-edge entries `X_ab` (`a < b`);
//! each contributes the column `vec(M E_ab − E_ab M)` (strict upper triangle, since the
//! commutator is skew-symmetric) with `E_ab = e_a e_bᵀ + e_b e_aᵀ`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::matrix::{matrix_fits_pattern, SymMatrix};
use super::NumlinError;
use crate::graph::Graph;

/// Relative singular value above which the system is treated as full rank.
pub const SSP_HOLD_RATIO: f64 = 1e-6;
/// Relative singular value below which the system is treated as rank deficient.
pub const SSP_FAIL_RATIO: f64 = 1e-10;
/// Nominal rank cut reported alongside the verdict.
pub const SSP_RANK_RATIO: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SspVerdict {
    Holds,
    Fails,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SspReport {
    pub verdict: SspVerdict,
    /// Number of non-edge unknowns.
    pub unknowns: usize,
    pub sigma_min: f64,
    pub sigma_max: f64,
    /// Numerical rank at `SSP_RANK_RATIO · σ_max`.
    pub rank: usize,
}

impl SspReport {
    pub fn holds(&self) -> bool {
        self.verdict == SspVerdict::Holds
    }
}

/// Runs the SSP rank test for `m` against its pattern graph `g`.
pub fn verify_ssp(m: &SymMatrix, g: &Graph) -> Result<SspReport, NumlinError> {
    if !matrix_fits_pattern(m, g)? {
        return Err(NumlinError::PatternMismatch);
    }
    let n = g.order();
    let fm = m.to_dmatrix();
    let nonedges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();
    if nonedges.is_empty() {
        return Ok(SspReport {
            verdict: SspVerdict::Holds,
            unknowns: 0,
            sigma_min: f64::INFINITY,
            sigma_max: f64::INFINITY,
            rank: 0,
        });
    }
    let rows = n * (n - 1) / 2;
    let mut l = DMatrix::<f64>::zeros(rows, nonedges.len());
    for (col, &(a, b)) in nonedges.iter().enumerate() {
        let mut row = 0;
        for i in 0..n {
            for j in i + 1..n {
                // (M E)_ij = M_ia δ_jb + M_ib δ_ja ; (E M)_ij = δ_ia M_bj + δ_ib M_aj
                let mut v = 0.0;
                if j == b {
                    v += fm[(i, a)];
                }
                if j == a {
                    v += fm[(i, b)];
                }
                if i == a {
                    v -= fm[(b, j)];
                }
                if i == b {
                    v -= fm[(a, j)];
                }
                l[(row, col)] = v;
                row += 1;
            }
        }
    }
    let sv = l.singular_values();
    let sigma_max = sv.max();
    // more unknowns than equations forces a kernel
    let sigma_min = if nonedges.len() > rows { 0.0 } else { sv.min() };
    let rank = sv.iter().filter(|&&s| s > SSP_RANK_RATIO * sigma_max).count();
    let ratio = if sigma_max > 0.0 { sigma_min / sigma_max } else { 0.0 };
    let verdict = if ratio > SSP_HOLD_RATIO {
        SspVerdict::Holds
    } else if ratio < SSP_FAIL_RATIO {
        SspVerdict::Fails
    } else {
        SspVerdict::Indeterminate
    };
    Ok(SspReport { verdict, unknowns: nonedges.len(), sigma_min, sigma_max, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use crate::numlin::matrix::{ExactMatrix, Packed};

    #[test]
    fn complete_pattern_holds_trivially() {
        let m = SymMatrix::Float(Packed::from_fn(4, |i, j| if i == j { 0.3 } else { 1.0 }));
        let r = verify_ssp(&m, &complete(4)).unwrap();
        assert!(r.holds());
        assert_eq!(r.unknowns, 0);
    }

    #[test]
    fn identity_on_two_isolated_vertices_fails() {
        let m = SymMatrix::Exact(ExactMatrix::identity(2));
        let r = verify_ssp(&m, &Graph::empty(2)).unwrap();
        assert_eq!(r.verdict, SspVerdict::Fails);
        assert_eq!(r.unknowns, 1);
    }

    #[test]
    fn generic_path_matrix_holds() {
        // distinct diagonal on P3: the single unknown X_02 cannot commute
        let m = SymMatrix::float_from_rows(&[
            vec![1.0, 1.0, 0.0],
            vec![1.0, 2.0, 1.0],
            vec![0.0, 1.0, 5.0],
        ]);
        let r = verify_ssp(&m, &crate::graph::path(3)).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}
