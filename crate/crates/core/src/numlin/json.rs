//! JSON exchange format for symmetric matrices.
//!
//! ```json
//! { "schema": "qtwo.matrix/1", "n": 2, "mode": "exact", "field": [2],
//!   "scale_sq": [1, 2], "upper": [{"rat": [1, 1]}, {"quad": {"2": [1, 3]}}, {"rat": [-1, 1]}] }
//! ```
//!
//! `upper` lists the upper triangle row by row. Exact entries are `{"rat": [p, q]}` or
//! `{"quad": {"<radicand>": [p, q], ...}}`; float entries are `{"f": x}`. Integers that do
//! not fit in 64 bits are written as decimal strings.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{ExactMatrix, Packed, SymMatrix};
use super::quad::{is_square_free, prime_factors, QuadElem};
use super::NumlinError;

pub const MATRIX_SCHEMA: &str = "qtwo.matrix/1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Big(String),
}

impl Num {
    fn from_big(v: &BigInt) -> Num {
        v.to_i64().map(Num::Int).unwrap_or_else(|| Num::Big(v.to_string()))
    }

    fn to_big(&self) -> Result<BigInt, NumlinError> {
        match self {
            Num::Int(v) => Ok(BigInt::from(*v)),
            Num::Big(s) => s.parse().map_err(|_| NumlinError::Json(format!("bad integer `{s}`"))),
        }
    }
}

fn rat_to_wire(q: &BigRational) -> [Num; 2] {
    [Num::from_big(q.numer()), Num::from_big(q.denom())]
}

fn rat_from_wire(w: &[Num; 2]) -> Result<BigRational, NumlinError> {
    let (p, q) = (w[0].to_big()?, w[1].to_big()?);
    if q.is_zero() {
        return Err(NumlinError::Json("zero denominator".into()));
    }
    Ok(BigRational::new(p, q))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Entry {
    Rat([Num; 2]),
    Quad(BTreeMap<String, [Num; 2]>),
    F(f64),
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Wire {
    schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    citation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    n: usize,
    mode: Mode,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    field: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scale_sq: Option<[Num; 2]>,
    upper: Vec<Entry>,
}

/// Descriptive fields stored next to a matrix.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixMeta {
    pub name: Option<String>,
    /// Name of the pattern graph (e.g. a catalog name or family string).
    pub graph: Option<String>,
    pub citation: Option<String>,
    pub note: Option<String>,
}

/// A matrix together with its metadata, as stored on disk.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixDoc {
    pub meta: MatrixMeta,
    pub matrix: SymMatrix,
}

impl MatrixDoc {
    pub fn new(matrix: SymMatrix) -> Self {
        MatrixDoc { meta: MatrixMeta::default(), matrix }
    }

    pub fn to_json(&self) -> Result<String, NumlinError> {
        let wire = to_wire(self)?;
        serde_json::to_string_pretty(&wire).map_err(|e| NumlinError::Json(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self, NumlinError> {
        let wire: Wire = serde_json::from_str(text).map_err(|e| NumlinError::Json(e.to_string()))?;
        from_wire(wire)
    }

    pub fn to_value(&self) -> Result<serde_json::Value, NumlinError> {
        serde_json::to_value(to_wire(self)?).map_err(|e| NumlinError::Json(e.to_string()))
    }

    pub fn from_value(value: serde_json::Value) -> Result<Self, NumlinError> {
        let wire: Wire = serde_json::from_value(value).map_err(|e| NumlinError::Json(e.to_string()))?;
        from_wire(wire)
    }

    pub fn read(path: &Path) -> Result<Self, NumlinError> {
        let text = std::fs::read_to_string(path).map_err(|e| NumlinError::Io(format!("{}: {e}", path.display())))?;
        MatrixDoc::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), NumlinError> {
        std::fs::write(path, self.to_json()? + "\n").map_err(|e| NumlinError::Io(format!("{}: {e}", path.display())))
    }
}

fn to_wire(doc: &MatrixDoc) -> Result<Wire, NumlinError> {
    let (mode, field, scale_sq, upper, n) = match &doc.matrix {
        SymMatrix::Float(m) => {
            let mut upper = Vec::with_capacity(m.upper().len());
            for &x in m.upper() {
                if !x.is_finite() {
                    return Err(NumlinError::Json("non-finite float entry".into()));
                }
                upper.push(Entry::F(x));
            }
            (Mode::Float, vec![], None, upper, m.n())
        }
        SymMatrix::Exact(m) => {
            let upper = m
                .entries
                .upper()
                .iter()
                .map(|e| match e.as_rational() {
                    Some(q) => Entry::Rat(rat_to_wire(&q)),
                    None => Entry::Quad(e.terms().map(|(r, c)| (r.to_string(), rat_to_wire(c))).collect()),
                })
                .collect();
            let scale = (!m.scale_sq.is_one()).then(|| rat_to_wire(&m.scale_sq));
            (Mode::Exact, m.field(), scale, upper, m.n())
        }
    };
    Ok(Wire {
        schema: MATRIX_SCHEMA.to_string(),
        name: doc.meta.name.clone(),
        graph: doc.meta.graph.clone(),
        citation: doc.meta.citation.clone(),
        note: doc.meta.note.clone(),
        n,
        mode,
        field,
        scale_sq,
        upper,
    })
}

fn from_wire(w: Wire) -> Result<MatrixDoc, NumlinError> {
    if w.schema != MATRIX_SCHEMA {
        return Err(NumlinError::Json(format!("unsupported schema `{}`", w.schema)));
    }
    if w.upper.len() != w.n * (w.n + 1) / 2 {
        return Err(NumlinError::Json(format!(
            "expected {} upper-triangle entries for n = {}, found {}",
            w.n * (w.n + 1) / 2,
            w.n,
            w.upper.len()
        )));
    }
    for &p in &w.field {
        if prime_factors(p) != vec![p] {
            return Err(NumlinError::Field(format!("field generator {p} is not prime")));
        }
    }
    let matrix = match w.mode {
        Mode::Float => {
            if w.scale_sq.is_some() {
                return Err(NumlinError::Json("scale_sq is only allowed in exact mode".into()));
            }
            let data = w
                .upper
                .iter()
                .map(|e| match e {
                    Entry::F(x) => Ok(*x),
                    _ => Err(NumlinError::MixedModes),
                })
                .collect::<Result<Vec<_>, _>>()?;
            SymMatrix::Float(Packed::from_upper(w.n, data).expect("length checked"))
        }
        Mode::Exact => {
            let mut data = Vec::with_capacity(w.upper.len());
            for e in &w.upper {
                let q = match e {
                    Entry::F(_) => return Err(NumlinError::MixedModes),
                    Entry::Rat(r) => QuadElem::from_rational(rat_from_wire(r)?),
                    Entry::Quad(terms) => {
                        let mut acc = QuadElem::zero();
                        for (key, c) in terms {
                            let r: u64 = key
                                .parse()
                                .map_err(|_| NumlinError::Json(format!("bad radicand `{key}`")))?;
                            if !is_square_free(r) {
                                return Err(NumlinError::Field(format!("radicand {r} is not square-free")));
                            }
                            if let Some(p) = prime_factors(r).into_iter().find(|p| !w.field.contains(p)) {
                                return Err(NumlinError::Field(format!("√{p} used but not declared in field")));
                            }
                            acc += &QuadElem::term(rat_from_wire(c)?, r);
                        }
                        acc
                    }
                };
                data.push(q);
            }
            let scale_sq = match &w.scale_sq {
                Some(s) => rat_from_wire(s)?,
                None => BigRational::one(),
            };
            if !scale_sq.is_positive() {
                return Err(NumlinError::Json("scale_sq must be positive".into()));
            }
            SymMatrix::Exact(ExactMatrix::with_scale_sq(
                Packed::from_upper(w.n, data).expect("length checked"),
                scale_sq,
            ))
        }
    };
    Ok(MatrixDoc {
        meta: MatrixMeta { name: w.name, graph: w.graph, citation: w.citation, note: w.note },
        matrix,
    })
}
