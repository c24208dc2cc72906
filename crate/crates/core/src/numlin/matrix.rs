//! Symmetric matrices in float or exact mode, with pattern, involution and spectrum checks.

use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::quad::QuadElem;
use super::NumlinError;
use crate::graph::Graph;

/// Absolute threshold below which a float entry counts as zero for pattern membership.
pub const PATTERN_ZERO_TOL: f64 = 1e-8;
/// Default max-norm tolerance for `M² = I` in float mode.
pub const INVOLUTION_TOL: f64 = 1e-10;
/// Default relative gap for eigenvalue clustering.
pub const EIGEN_TOL: f64 = 1e-8;

/// Upper triangle (diagonal included) of a symmetric matrix, packed row by row.
#[derive(Debug, Clone, PartialEq)]
pub struct Packed<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone> Packed<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                data.push(f(i, j));
            }
        }
        Packed { n, data }
    }

    /// Builds from the packed upper triangle; `None` if the length is wrong.
    pub fn from_upper(n: usize, data: Vec<T>) -> Option<Self> {
        (data.len() == n * (n + 1) / 2).then_some(Packed { n, data })
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        assert!(j < self.n, "index ({i}, {j}) out of range for n = {}", self.n);
        i * self.n - i * i.saturating_sub(1) / 2 + (j - i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[self.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        let k = self.index(i, j);
        self.data[k] = v;
    }

    pub fn upper(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Packed<U> {
        Packed { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl Packed<f64> {
    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| *self.get(i, j))
    }

    /// Upper triangle of `m`; the caller is responsible for symmetry.
    pub fn from_dmatrix(m: &DMatrix<f64>) -> Self {
        Packed::from_fn(m.nrows(), |i, j| m[(i, j)])
    }
}

/// Exact matrix `√scale_sq · E` with entries of `E` in a multi-quadratic field.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix {
    pub entries: Packed<QuadElem>,
    /// Square of the global positive scalar, kept symbolic.
    pub scale_sq: BigRational,
}

impl ExactMatrix {
    pub fn new(entries: Packed<QuadElem>) -> Self {
        ExactMatrix { entries, scale_sq: BigRational::one() }
    }

    pub fn with_scale_sq(entries: Packed<QuadElem>, scale_sq: BigRational) -> Self {
        assert!(scale_sq.is_positive(), "scale_sq must be positive");
        ExactMatrix { entries, scale_sq }
    }

    /// Integer matrix from full rows.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        ExactMatrix::new(Packed::from_fn(n, |i, j| QuadElem::from_int(rows[i][j])))
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix::new(Packed::from_fn(n, |i, j| {
            if i == j { QuadElem::one() } else { QuadElem::zero() }
        }))
    }

    pub fn n(&self) -> usize {
        self.entries.n()
    }

    /// `E²` (unscaled), exactly.
    pub fn square_unscaled(&self) -> Packed<QuadElem> {
        let n = self.n();
        Packed::from_fn(n, |i, j| {
            let mut acc = QuadElem::zero();
            for k in 0..n {
                let a = self.entries.get(i, k);
                let b = self.entries.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        })
    }

    /// Decides `scale_sq · E² = I` exactly.
    pub fn is_involution(&self) -> bool {
        let sq = self.square_unscaled();
        let n = self.n();
        let target = QuadElem::from_rational(BigRational::one() / &self.scale_sq);
        (0..n).all(|i| (i..n).all(|j| {
            let v = sq.get(i, j);
            if i == j { *v == target } else { v.is_zero() }
        }))
    }

    /// Equivalent matrix with `scale_sq = 1`, the scalar folded into the entries.
    pub fn fold_scale(&self) -> Option<ExactMatrix> {
        let s = QuadElem::sqrt_rational(&self.scale_sq)?;
        Some(ExactMatrix::new(self.entries.map(|e| e * &s)))
    }

    /// Primes `p` whose root appears in some entry.
    pub fn field(&self) -> Vec<u64> {
        let mut primes: Vec<u64> = self
            .entries
            .upper()
            .iter()
            .flat_map(|e| e.radicands().collect::<Vec<_>>())
            .flat_map(super::quad::prime_factors)
            .collect();
        primes.sort_unstable();
        primes.dedup();
        primes
    }

    pub fn to_float(&self) -> Packed<f64> {
        let s = self.scale_sq.to_f64_lossy().sqrt();
        self.entries.map(|e| s * e.to_f64())
    }

    pub fn scale(&self, factor_sq: &BigRational) -> ExactMatrix {
        ExactMatrix::with_scale_sq(self.entries.clone(), &self.scale_sq * factor_sq)
    }
}

trait LossyF64 {
    fn to_f64_lossy(&self) -> f64;
}

impl LossyF64 for BigRational {
    fn to_f64_lossy(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// A dense symmetric matrix with one entry mode.
#[derive(Debug, Clone, PartialEq)]
pub enum SymMatrix {
    Float(Packed<f64>),
    Exact(ExactMatrix),
}

impl From<ExactMatrix> for SymMatrix {
    fn from(m: ExactMatrix) -> Self {
        SymMatrix::Exact(m)
    }
}

impl From<Packed<f64>> for SymMatrix {
    fn from(m: Packed<f64>) -> Self {
        SymMatrix::Float(m)
    }
}

impl SymMatrix {
    pub fn n(&self) -> usize {
        match self {
            SymMatrix::Float(m) => m.n(),
            SymMatrix::Exact(m) => m.n(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SymMatrix::Exact(_))
    }

    /// Float matrix from full rows, using the upper triangle.
    pub fn float_from_rows(rows: &[Vec<f64>]) -> Self {
        SymMatrix::Float(Packed::from_fn(rows.len(), |i, j| rows[i][j]))
    }

    /// Float matrix from the upper triangle of `m`.
    pub fn from_dmatrix(m: &DMatrix<f64>) -> Self {
        SymMatrix::Float(Packed::from_dmatrix(m))
    }

    pub fn to_packed_f64(&self) -> Packed<f64> {
        match self {
            SymMatrix::Float(m) => m.clone(),
            SymMatrix::Exact(m) => m.to_float(),
        }
    }

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        self.to_packed_f64().to_dmatrix()
    }

    /// Float view of this matrix.
    pub fn to_float(&self) -> SymMatrix {
        SymMatrix::Float(self.to_packed_f64())
    }

    pub fn as_exact(&self) -> Option<&ExactMatrix> {
        match self {
            SymMatrix::Exact(m) => Some(m),
            SymMatrix::Float(_) => None,
        }
    }

    /// Whether entry `(i, j)` is zero: exactly, or below [`PATTERN_ZERO_TOL`] in float mode.
    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        match self {
            SymMatrix::Float(m) => m.get(i, j).abs() <= PATTERN_ZERO_TOL,
            SymMatrix::Exact(m) => m.entries.get(i, j).is_zero(),
        }
    }

    /// Graph of nonzero off-diagonal entries.
    pub fn support(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if !self.is_zero_at(i, j) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        g
    }
}

/// True iff every edge entry is nonzero and every non-edge off-diagonal entry is zero.
pub fn matrix_fits_pattern(m: &SymMatrix, g: &Graph) -> Result<bool, NumlinError> {
    if m.n() != g.order() {
        return Err(NumlinError::Dimension { expected: g.order(), found: m.n() });
    }
    let n = m.n();
    Ok((0..n).all(|i| (i + 1..n).all(|j| g.has_edge(i, j) != m.is_zero_at(i, j))))
}

/// Outcome of an involution check.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct InvolutionReport {
    /// Exact decision, present in exact mode.
    pub exact: Option<bool>,
    /// `max |(M² − I)_ij|` in floating point.
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Max-norm of `M² − I`.
pub fn involution_residual(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    let r = m * m - DMatrix::<f64>::identity(n, n);
    r.amax()
}

pub fn verify_involution(m: &SymMatrix) -> InvolutionReport {
    verify_involution_tol(m, INVOLUTION_TOL)
}

/// Exact mode decides exactly (the float residual is informational); float mode compares
/// the residual against `tol`.
pub fn verify_involution_tol(m: &SymMatrix, tol: f64) -> InvolutionReport {
    let residual = involution_residual(&m.to_dmatrix());
    match m {
        SymMatrix::Exact(e) => {
            let ok = e.is_involution();
            InvolutionReport { exact: Some(ok), residual, tol, pass: ok }
        }
        SymMatrix::Float(_) => InvolutionReport {
            exact: None,
            residual,
            tol,
            pass: residual <= tol,
        },
    }
}

/// Ascending eigenvalues of a symmetric matrix.
pub fn eigenvalues(m: &SymMatrix) -> Result<Vec<f64>, NumlinError> {
    let dm = m.to_dmatrix();
    let eig = SymmetricEigen::try_new(dm, 1e-14, 10_000).ok_or(NumlinError::NonConvergence)?;
    let mut ev: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Eigenvalue clusters `(mean, multiplicity)`, ascending; consecutive sorted eigenvalues are
/// merged when their gap is at most `tol · max(1, ‖M‖₂)`.
pub fn eigenvalue_clusters(m: &SymMatrix, tol: f64) -> Result<Vec<(f64, usize)>, NumlinError> {
    let ev = eigenvalues(m)?;
    let norm = ev.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    let gap = tol * norm.max(1.0);
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut sum = 0.0;
    let mut last = f64::NEG_INFINITY;
    for &x in &ev {
        match out.last_mut() {
            Some((mean, count)) if x - last <= gap => {
                sum += x;
                *count += 1;
                *mean = sum / *count as f64;
            }
            _ => {
                sum = x;
                out.push((x, 1));
            }
        }
        last = x;
    }
    Ok(out)
}

pub fn distinct_eigenvalue_count(m: &SymMatrix, tol: f64) -> Result<usize, NumlinError> {
    Ok(eigenvalue_clusters(m, tol)?.len())
}
