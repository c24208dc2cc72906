//! Constructions that turn known involutions into new ones.

use num_rational::BigRational;

use super::WitnessError;
use crate::graph::Isomorphism;
use crate::numlin::{verify_involution_tol, CrossBlock, ExactMatrix, Packed, QuadElem, SymMatrix, INVOLUTION_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteForm {
    /// `[[0, B], [Bᵀ, 0]]`
    ZeroDiag,
    /// `(1/√2)[[I, B], [Bᵀ, −I]]`
    HalfIdentity,
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn fold(e: &QuadElem, scale_sq: &BigRational) -> Result<QuadElem, WitnessError> {
    let s = QuadElem::sqrt_rational(scale_sq)
        .ok_or_else(|| WitnessError::Parameter("scale too large to fold".into()))?;
    Ok(e * &s)
}

/// Symmetric involution on the bipartite double of `B`'s support; rows of `B` become vertices
/// `0..m`, columns vertices `m..m+n`.
pub fn bipartite_lift(b: &CrossBlock, form: BipartiteForm) -> Result<SymMatrix, WitnessError> {
    if !b.is_orthogonal(INVOLUTION_TOL) {
        return Err(WitnessError::NotOrthogonal);
    }
    let m = b.rows();
    let n = m + b.cols();
    match b {
        CrossBlock::Exact { entries, scale_sq } => match form {
            BipartiteForm::ZeroDiag => Ok(SymMatrix::Exact(ExactMatrix::with_scale_sq(
                Packed::from_fn(n, |i, j| if i < m && j >= m { entries[i][j - m].clone() } else { QuadElem::zero() }),
                scale_sq.clone(),
            ))),
            BipartiteForm::HalfIdentity => {
                let mut folded = Vec::with_capacity(m);
                for row in entries {
                    folded.push(row.iter().map(|e| fold(e, scale_sq)).collect::<Result<Vec<_>, _>>()?);
                }
                Ok(SymMatrix::Exact(ExactMatrix::with_scale_sq(
                    Packed::from_fn(n, |i, j| match (i < m, j < m) {
                        _ if i == j => QuadElem::from_int(if i < m { 1 } else { -1 }),
                        (true, false) => folded[i][j - m].clone(),
                        _ => QuadElem::zero(),
                    }),
                    half(),
                )))
            }
        },
        CrossBlock::Float(bm) => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            Ok(SymMatrix::Float(Packed::from_fn(n, |i, j| match form {
                BipartiteForm::ZeroDiag => if i < m && j >= m { bm[(i, j - m)] } else { 0.0 },
                BipartiteForm::HalfIdentity => match (i < m, j < m) {
                    _ if i == j => if i < m { s } else { -s },
                    (true, false) => s * bm[(i, j - m)],
                    _ => 0.0,
                },
            })))
        }
    }
}

fn precheck(m: &SymMatrix, tol: f64) -> Result<(), WitnessError> {
    let r = verify_involution_tol(m, tol);
    if r.pass {
        Ok(())
    } else {
        Err(WitnessError::NotInvolution(r.residual))
    }
}

/// `N = (1/√2)[[M, I], [I, −M]]` laid out so vertex `(g, h)` of `G □ K_2` is `2g + h`,
/// matching [`crate::graph::cartesian_product`].
pub fn product_lift(m: &SymMatrix) -> Result<SymMatrix, WitnessError> {
    product_lift_tol(m, INVOLUTION_TOL)
}

/// [`product_lift`] with an explicit pre-check tolerance for float inputs.
pub fn product_lift_tol(m: &SymMatrix, tol: f64) -> Result<SymMatrix, WitnessError> {
    precheck(m, tol)?;
    let n = m.n();
    let entry = |i: usize, j: usize| ((i / 2, i % 2), (j / 2, j % 2));
    match m {
        SymMatrix::Exact(e) => {
            let folded = e.fold_scale().ok_or_else(|| WitnessError::Parameter("scale too large to fold".into()))?;
            Ok(SymMatrix::Exact(ExactMatrix::with_scale_sq(
                Packed::from_fn(2 * n, |i, j| {
                    let ((g1, h1), (g2, h2)) = entry(i, j);
                    match (h1, h2) {
                        (0, 0) => folded.entries.get(g1, g2).clone(),
                        (1, 1) => -folded.entries.get(g1, g2),
                        _ => QuadElem::from_int((g1 == g2) as i64),
                    }
                }),
                half(),
            )))
        }
        SymMatrix::Float(f) => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            Ok(SymMatrix::Float(Packed::from_fn(2 * n, |i, j| {
                let ((g1, h1), (g2, h2)) = entry(i, j);
                s * match (h1, h2) {
                    (0, 0) => *f.get(g1, g2),
                    (1, 1) => -*f.get(g1, g2),
                    _ => (g1 == g2) as u8 as f64,
                }
            })))
        }
    }
}

/// Involution on `jdup(G, v)` from an involution `M` on `G`.
///
/// With `u = n` the new vertex, `P` the identity with column `v` replaced by `c e_v + s e_u`
/// and `q = −s e_v + c e_u`, the matrix `N = P M Pᵀ + ε q qᵀ` is an orthogonal conjugate of
/// `M ⊕ [ε]`. Here `c = 3/5`, `s = 4/5`, and `ε = ±1` is chosen opposite in sign to `m_vv`
/// so that `N_vu = cs(m_vv − ε)` is nonzero.
pub fn jdup_lift(m: &SymMatrix, v: usize) -> Result<SymMatrix, WitnessError> {
    jdup_lift_tol(m, v, INVOLUTION_TOL)
}

pub fn jdup_lift_tol(m: &SymMatrix, v: usize, tol: f64) -> Result<SymMatrix, WitnessError> {
    let n = m.n();
    if v >= n {
        return Err(WitnessError::Parameter(format!("vertex {v} out of range for n = {n}")));
    }
    precheck(m, tol)?;
    let u = n;
    match m {
        SymMatrix::Exact(e) => {
            let f = e.fold_scale().ok_or_else(|| WitnessError::Parameter("scale too large to fold".into()))?;
            let c = QuadElem::rat(3, 5);
            let s = QuadElem::rat(4, 5);
            let mvv = f.entries.get(v, v).clone();
            let eps = QuadElem::from_int(if mvv.to_f64() < 0.0 { 1 } else { -1 });
            let get = |i: usize, j: usize| f.entries.get(i, j).clone();
            Ok(SymMatrix::Exact(ExactMatrix::new(Packed::from_fn(n + 1, |i, j| {
                match (i == v || i == u, j == v || j == u) {
                    (false, false) => get(i, j),
                    (false, true) => &get(i, v) * if j == v { &c } else { &s },
                    (true, false) => &get(v, j) * if i == v { &c } else { &s },
                    (true, true) => {
                        if i == v && j == v {
                            &(&(&c * &c) * &mvv) + &(&eps * &(&s * &s))
                        } else if i == u && j == u {
                            &(&(&s * &s) * &mvv) + &(&eps * &(&c * &c))
                        } else {
                            &(&c * &s) * &(&mvv - &eps)
                        }
                    }
                }
            }))))
        }
        SymMatrix::Float(f) => {
            let (c, s) = (0.6, 0.8);
            let mvv = *f.get(v, v);
            let eps = if mvv < 0.0 { 1.0 } else { -1.0 };
            let get = |i: usize, j: usize| *f.get(i, j);
            Ok(SymMatrix::Float(Packed::from_fn(n + 1, |i, j| {
                match (i == v || i == u, j == v || j == u) {
                    (false, false) => get(i, j),
                    (false, true) => get(i, v) * if j == v { c } else { s },
                    (true, false) => get(v, j) * if i == v { c } else { s },
                    (true, true) => {
                        if i == v && j == v {
                            c * c * mvv + eps * s * s
                        } else if i == u && j == u {
                            s * s * mvv + eps * c * c
                        } else {
                            c * s * (mvv - eps)
                        }
                    }
                }
            })))
        }
    }
}

/// Relabels a witness along an isomorphism `G -> H`: `N[φ(i), φ(j)] = M[i, j]`.
pub fn transport(m: &SymMatrix, iso: &Isomorphism) -> SymMatrix {
    let n = m.n();
    let mut inv = vec![0; n];
    for (i, &w) in iso.map.iter().enumerate() {
        inv[w] = i;
    }
    match m {
        SymMatrix::Exact(e) => SymMatrix::Exact(ExactMatrix::with_scale_sq(
            Packed::from_fn(n, |a, b| e.entries.get(inv[a], inv[b]).clone()),
            e.scale_sq.clone(),
        )),
        SymMatrix::Float(f) => SymMatrix::Float(Packed::from_fn(n, |a, b| *f.get(inv[a], inv[b]))),
    }
}

/// `I − (2/s)J`, a symmetric involution fitting `K_s`.
pub fn complete_involution(s: usize) -> ExactMatrix {
    let off = QuadElem::rat(-2, s as i64);
    let diag = &QuadElem::one() + &off;
    ExactMatrix::new(Packed::from_fn(s, |i, j| if i == j { diag.clone() } else { off.clone() }))
}

/// `M_m ⊗ I + I ⊗ M_n` with `M_s = I − (2/s)J`; fits `K_m □ K_n` (vertex `(a, b)` is
/// `a·n + b`) and has spectrum `{2, 0, −2}` for `m, n >= 2`.
pub fn kronecker_3ev(m: usize, n: usize) -> Result<ExactMatrix, WitnessError> {
    if m < 2 || n < 2 {
        return Err(WitnessError::Parameter(format!("kronecker_3ev needs m, n >= 2, got ({m}, {n})")));
    }
    let (a, b) = (complete_involution(m), complete_involution(n));
    Ok(ExactMatrix::new(Packed::from_fn(m * n, |i, j| {
        let ((i1, i2), (j1, j2)) = ((i / n, i % n), (j / n, j % n));
        let mut v = QuadElem::zero();
        if i2 == j2 {
            v += a.entries.get(i1, j1);
        }
        if i1 == j1 {
            v += b.entries.get(i2, j2);
        }
        v
    })))
}

/// Orthogonal 5×5 circulant with zero diagonal and all off-diagonal entries nonzero:
/// first row `(0, (5+√5)/10, √5/5, −√5/5, (5−√5)/10)`.
pub fn zero_diagonal_orthogonal_5() -> CrossBlock {
    let first = [
        QuadElem::zero(),
        &QuadElem::rat(1, 2) + &QuadElem::scaled_sqrt(1, 10, 5),
        QuadElem::scaled_sqrt(1, 5, 5),
        QuadElem::scaled_sqrt(-1, 5, 5),
        &QuadElem::rat(1, 2) - &QuadElem::scaled_sqrt(1, 10, 5),
    ];
    CrossBlock::exact((0..5).map(|i| (0..5).map(|j| first[(j + 5 - i) % 5].clone()).collect()).collect())
}

pub(crate) fn one_by_one() -> ExactMatrix {
    ExactMatrix::new(Packed::from_fn(1, |_, _| QuadElem::one()))
}
