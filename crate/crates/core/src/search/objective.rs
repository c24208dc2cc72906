//! The penalized involution objective over the free entries of a pattern.

use nalgebra::{DMatrix, DVector};

use crate::graph::Graph;

/// Free coordinates of `S(G)` plus diagonal: the `n` diagonal entries first, then the edges
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEntries {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl FreeEntries {
    pub fn new(g: &Graph) -> Self {
        FreeEntries { n: g.order(), edges: g.edges().collect() }
    }

    pub fn len(&self) -> usize {
        self.n + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_matrix(&self, x: &[f64]) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            m[(i, i)] = x[i];
        }
        for (k, &(i, j)) in self.edges.iter().enumerate() {
            m[(i, j)] = x[self.n + k];
            m[(j, i)] = x[self.n + k];
        }
        m
    }

    /// Reads the free entries of `m`; entries off the pattern are dropped.
    pub fn from_matrix(&self, m: &DMatrix<f64>) -> Vec<f64> {
        (0..self.n).map(|i| m[(i, i)]).chain(self.edges.iter().map(|&(i, j)| m[(i, j)])).collect()
    }

    pub fn edge_values<'a>(&self, x: &'a [f64]) -> &'a [f64] {
        &x[self.n..]
    }
}

/// `f(M) = ‖M² − I‖_F² + μ Σ_e max(0, ε − |m_e|)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Penalty {
    pub weight: f64,
    pub eps: f64,
}

pub fn involution_defect(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    m * m - DMatrix::identity(n, n)
}

pub fn objective(free: &FreeEntries, x: &[f64], pen: Penalty) -> f64 {
    let m = free.to_matrix(x);
    let smooth = involution_defect(&m).norm_squared();
    smooth + penalty_value(free.edge_values(x), pen)
}

fn penalty_value(edges: &[f64], pen: Penalty) -> f64 {
    edges.iter().map(|v| (pen.eps - v.abs()).max(0.0).powi(2)).sum::<f64>() * pen.weight
}

/// Gradient of [`objective`]: `4(M³ − M)` on the diagonal, twice that on edge coordinates, plus
/// the penalty term `−2μ(ε − |m|)·sign(m)` where active.
pub fn gradient(free: &FreeEntries, x: &[f64], pen: Penalty) -> Vec<f64> {
    let m = free.to_matrix(x);
    let g = (&m * &m * &m - &m) * 4.0;
    let mut out = Vec::with_capacity(free.len());
    for i in 0..free.n {
        out.push(g[(i, i)]);
    }
    for (k, &(i, j)) in free.edges.iter().enumerate() {
        let v = x[free.n + k];
        let gap = pen.eps - v.abs();
        let p = if gap > 0.0 { -2.0 * pen.weight * gap * v.signum() } else { 0.0 };
        out.push(2.0 * g[(i, j)] + p);
    }
    out
}

/// Residual vector `r` with `‖r‖² = f`: the upper triangle of `M² − I` (off-diagonal entries
/// weighted by `√2`) followed by the active penalty terms.
pub fn residuals(free: &FreeEntries, x: &[f64], pen: Penalty) -> DVector<f64> {
    let n = free.n;
    let m = free.to_matrix(x);
    let d = involution_defect(&m);
    let rt2 = std::f64::consts::SQRT_2;
    let mut r = Vec::with_capacity(n * (n + 1) / 2 + free.edges.len());
    for j in 0..n {
        for i in 0..=j {
            r.push(if i == j { d[(i, j)] } else { rt2 * d[(i, j)] });
        }
    }
    let sw = pen.weight.sqrt();
    for &v in free.edge_values(x) {
        r.push(sw * (pen.eps - v.abs()).max(0.0));
    }
    DVector::from_vec(r)
}

/// Jacobian of [`residuals`].
pub fn jacobian(free: &FreeEntries, x: &[f64], pen: Penalty) -> DMatrix<f64> {
    let n = free.n;
    let m = free.to_matrix(x);
    let tri = n * (n + 1) / 2;
    let rows = tri + free.edges.len();
    let mut jac = DMatrix::zeros(rows, free.len());
    let rt2 = std::f64::consts::SQRT_2;
    let row_of = |a: usize, b: usize| {
        let (i, j) = if a <= b { (a, b) } else { (b, a) };
        j * (j + 1) / 2 + i
    };
    let weight = |a: usize, b: usize| if a == b { 1.0 } else { rt2 };
    // d(M²) for a coordinate touching entries (i, j) and (j, i): rows i and j, columns i and j
    let mut add = |col: usize, i: usize, j: usize| {
        let mut touched: Vec<(usize, usize, f64)> = Vec::new();
        for b in 0..n {
            // (E M)_{ab} for E = e_i e_jᵀ (+ e_j e_iᵀ when i != j)
            touched.push((i, b, m[(j, b)]));
            if i != j {
                touched.push((j, b, m[(i, b)]));
            }
        }
        for a in 0..n {
            touched.push((a, j, m[(a, i)]));
            if i != j {
                touched.push((a, i, m[(a, j)]));
            }
        }
        for (a, b, v) in touched {
            if a <= b {
                jac[(row_of(a, b), col)] += weight(a, b) * v;
            }
        }
    };
    for i in 0..n {
        add(i, i, i);
    }
    for (k, &(i, j)) in free.edges.iter().enumerate() {
        add(n + k, i, j);
    }
    let sw = pen.weight.sqrt();
    for (k, &v) in free.edge_values(x).iter().enumerate() {
        if pen.eps - v.abs() > 0.0 {
            jac[(tri + k, n + k)] = -sw * v.signum();
        }
    }
    jac
}

/// Largest entry of `|M² − I|`.
pub fn max_defect(m: &DMatrix<f64>) -> f64 {
    involution_defect(m).amax()
}
