//! Best-effort recovery of exact entries from a float witness.

use num_rational::BigRational;

use crate::numlin::{ExactMatrix, Packed, QuadElem, SymMatrix};

/// Entries are snapped only if within this distance of a candidate.
pub const ROUNDING_TOL: f64 = 1e-6;
const MAX_DEN: i64 = 60;
const RADICANDS: [u64; 5] = [2, 3, 5, 6, 10];

#[derive(Debug, Clone)]
pub struct RoundingProbe {
    pub matrix: SymMatrix,
    pub snapped: usize,
    pub total: usize,
    /// True if every entry snapped and the snapped matrix squares to `I` exactly.
    pub exact: bool,
    pub note: String,
}

fn snap_rational(x: f64) -> Option<QuadElem> {
    (1..=MAX_DEN).find_map(|d| {
        let a = (x * d as f64).round();
        ((x - a / d as f64).abs() <= ROUNDING_TOL).then(|| QuadElem::rat(a as i64, d))
    })
}

/// `x ≈ (A + B√r)/d` with small integers.
fn snap(x: f64) -> Option<QuadElem> {
    if let Some(q) = snap_rational(x) {
        return Some(q);
    }
    // smallest denominator first: with large d almost any x has a spurious fit
    for d in 1..=MAX_DEN {
        for r in RADICANDS {
            let s = (r as f64).sqrt();
            for b in (-4 * d..=4 * d).filter(|&b| b != 0) {
                let rest = x * d as f64 - b as f64 * s;
                let a = rest.round();
                if (x - (a + b as f64 * s) / d as f64).abs() <= ROUNDING_TOL {
                    let c = BigRational::new(b.into(), d.into());
                    return Some(&QuadElem::rat(a as i64, d) + &QuadElem::term(c, r));
                }
            }
        }
    }
    None
}

/// Tries to replace every entry by a nearby `p/q` or `p/q + (p'/q')√r`, `r ∈ {2, 3, 5, 6, 10}`.
/// Returns the exact matrix only if it verifies exactly; otherwise `m` unchanged with a note.
pub fn rounding_probe(m: &SymMatrix) -> RoundingProbe {
    let f = m.to_packed_f64();
    let n = f.n();
    let total = n * (n + 1) / 2;
    let snapped: Vec<Option<QuadElem>> = f.upper().iter().map(|&x| snap(x)).collect();
    let count = snapped.iter().filter(|s| s.is_some()).count();
    let unchanged = |note: String| RoundingProbe { matrix: m.clone(), snapped: count, total, exact: false, note };
    if count < total {
        return unchanged(format!("{} of {total} entries have no small closed form", total - count));
    }
    let data: Vec<QuadElem> = snapped.into_iter().map(Option::unwrap).collect();
    let e = ExactMatrix::new(Packed::from_upper(n, data).expect("packed length"));
    if !e.is_involution() {
        return unchanged("snapped entries do not square to I exactly".into());
    }
    if e.to_float().upper().iter().zip(f.upper()).any(|(a, b)| (*a == 0.0) != (*b == 0.0)) {
        return unchanged("snapping changed the zero pattern".into());
    }
    RoundingProbe { matrix: SymMatrix::Exact(e), snapped: count, total, exact: true, note: "exact".into() }
}
