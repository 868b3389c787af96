//! JSON documents: semiring and matrix files, and the reports the CLI emits.
//!
//! Elements are written by display name. On input a matrix entry may be a
//! name (string) or a canonical index (number); names win when a string is
//! both.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classify::{ClassificationReport, GramWitness, NnrVerdict, PsdVerdict};
use crate::error::{Error, Result};
use crate::factorization::{CholeskyResult, CholeskyStatus, HypothesisLevel, LuFactors};
use crate::matrix::{ElemVec, Matrix, StrongInvertibility};
use crate::semiring::{parse_uri, validate_table, AnySemiring, RawTables, Semiring, SemiringTable};
use crate::solve::Solution;

/// Resolve a builder URI, or failing that, read a semiring JSON file.
pub fn load_semiring(spec: &str) -> Result<AnySemiring> {
    match parse_uri(spec) {
        Ok(s) => Ok(s),
        Err(uri_err) => {
            let path = Path::new(spec);
            if !path.is_file() {
                return Err(uri_err);
            }
            Ok(AnySemiring::Finite(read_semiring_file(path)?))
        }
    }
}

pub fn read_semiring_file(path: &Path) -> Result<SemiringTable> {
    let raw: RawTables = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Ok(validate_table(&raw)?.relabel(path.display().to_string()))
}

/// Parse inline JSON if `arg` looks like JSON, otherwise read it as a file.
pub fn read_json_arg<T: for<'de> Deserialize<'de>>(arg: &str) -> Result<T> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)?
    };
    Ok(serde_json::from_str(&text)?)
}

/// `{"semiring": "<uri>", "rows": [["name-or-index", ...], ...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semiring: Option<String>,
    pub rows: Vec<Vec<Value>>,
}

/// A right-hand side: a bare array of entries or `{"entries": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VectorDoc {
    Bare(Vec<Value>),
    Tagged {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        semiring: Option<String>,
        entries: Vec<Value>,
    },
}

impl VectorDoc {
    pub fn entries(&self) -> &[Value] {
        match self {
            VectorDoc::Bare(e) | VectorDoc::Tagged { entries: e, .. } => e,
        }
    }
}

fn element_from_value<S: Semiring>(s: &S, v: &Value) -> Result<S::Elem> {
    match v {
        Value::String(text) => s.parse_element(text),
        Value::Number(num) => s.parse_element(&num.to_string()),
        other => Err(Error::UnknownElement(other.to_string())),
    }
}

pub fn matrix_from_doc<S: Semiring>(s: &Arc<S>, doc: &MatrixDoc) -> Result<Matrix<S>> {
    let rows = doc
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| element_from_value(s.as_ref(), v))
                .collect()
        })
        .collect::<Result<_>>()?;
    Matrix::from_rows(s, rows)
}

pub fn matrix_to_doc<S: Semiring>(m: &Matrix<S>) -> MatrixDoc {
    let s = m.semiring();
    MatrixDoc {
        semiring: Some(s.label().to_string()),
        rows: m
            .to_rows()
            .iter()
            .map(|row| row.iter().map(|e| Value::String(s.name(e))).collect())
            .collect(),
    }
}

pub fn vector_from_doc<S: Semiring>(s: &Arc<S>, doc: &VectorDoc) -> Result<ElemVec<S>> {
    let entries = doc
        .entries()
        .iter()
        .map(|v| element_from_value(s.as_ref(), v))
        .collect::<Result<_>>()?;
    Ok(ElemVec::new(s, entries))
}

fn names<S: Semiring>(s: &S, elems: &[S::Elem]) -> Vec<String> {
    elems.iter().map(|e| s.name(e)).collect()
}

/// Summary of a semiring and its derived sets.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemiringInfoDoc {
    pub label: String,
    pub order: usize,
    pub zero: String,
    pub one: String,
    pub names: Vec<String>,
    pub units: Vec<String>,
    pub add_invertible: Vec<String>,
    pub squares: Vec<String>,
    pub is_ring: bool,
    pub antinegative: bool,
    pub q_closed: bool,
}

pub fn semiring_info(s: &SemiringTable) -> SemiringInfoDoc {
    let d = s.derived_sets();
    SemiringInfoDoc {
        label: s.label().to_string(),
        order: s.names().len(),
        zero: s.name(&s.zero()),
        one: s.name(&s.one()),
        names: s.names().to_vec(),
        units: names(s, &d.units()),
        add_invertible: names(s, &d.add_invertible()),
        squares: names(s, &d.squares()),
        is_ring: s.is_ring(),
        antinegative: s.is_antinegative(),
        q_closed: crate::classify::q_closed(s).expect("finite"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum StatusDoc {
    Success,
    NotSymmetric,
    NotStronglyInvertible { k: usize },
    PivotNotSquare { step: usize, pivot: String },
    SubdiagonalNotNegatable { step: usize, index: usize },
}

/// `{"status": ..., "L": matrix, "pivots": [...], "verified_hypotheses": ...}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CholeskyDoc {
    #[serde(flatten)]
    pub status: StatusDoc,
    #[serde(rename = "L")]
    pub l: Option<MatrixDoc>,
    pub pivots: Vec<String>,
    pub verified_hypotheses: HypothesisLevel,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerical_range: Option<NnrDoc>,
}

pub fn cholesky_doc<S: Semiring>(s: &S, r: &CholeskyResult<S>) -> CholeskyDoc {
    let status = match &r.status {
        CholeskyStatus::Success => StatusDoc::Success,
        CholeskyStatus::NotSymmetric => StatusDoc::NotSymmetric,
        CholeskyStatus::NotStronglyInvertible { k } => StatusDoc::NotStronglyInvertible { k: *k },
        CholeskyStatus::PivotNotSquare { step, pivot } => StatusDoc::PivotNotSquare {
            step: *step,
            pivot: s.name(pivot),
        },
        CholeskyStatus::SubdiagonalNotNegatable { step, index } => {
            StatusDoc::SubdiagonalNotNegatable {
                step: *step,
                index: *index,
            }
        }
    };
    CholeskyDoc {
        status,
        l: r.factor.as_ref().map(matrix_to_doc),
        pivots: names(s, &r.pivots),
        verified_hypotheses: r.verified,
        numerical_range: r.numerical_range.as_ref().map(|v| nnr_doc(s, v)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NnrDoc {
    Yes,
    No { witness: Vec<String>, value: String },
    Unknown { bound: usize },
}

pub fn nnr_doc<S: Semiring>(s: &S, v: &NnrVerdict<S::Elem>) -> NnrDoc {
    match v {
        NnrVerdict::Yes => NnrDoc::Yes,
        NnrVerdict::No { witness, value } => NnrDoc::No {
            witness: names(s, witness),
            value: s.name(value),
        },
        NnrVerdict::Unknown { bound } => NnrDoc::Unknown { bound: *bound },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramDoc {
    pub generators: Vec<Vec<String>>,
    pub multiplicity: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PsdDoc {
    Yes { witness: GramDoc },
    No,
    Unknown,
}

fn gram_doc<S: Semiring>(w: &GramWitness<S>) -> GramDoc {
    GramDoc {
        generators: w.generators.iter().map(ElemVec::names).collect(),
        multiplicity: w.multiplicity.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongDoc {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationDoc {
    pub symmetric: bool,
    pub invertible: bool,
    pub strongly_invertible: StrongDoc,
    pub nnr: NnrDoc,
    pub psd: PsdDoc,
    pub q_closed_semiring: Option<bool>,
}

pub fn classification_doc<S: Semiring>(s: &S, r: &ClassificationReport<S>) -> ClassificationDoc {
    ClassificationDoc {
        symmetric: r.symmetric,
        invertible: r.invertible,
        strongly_invertible: match r.strongly_invertible {
            StrongInvertibility::Yes => StrongDoc {
                holds: true,
                failing_k: None,
            },
            StrongInvertibility::FailsAt(k) => StrongDoc {
                holds: false,
                failing_k: Some(k),
            },
        },
        nnr: nnr_doc(s, &r.nnr),
        psd: match &r.psd {
            PsdVerdict::Yes(w) => PsdDoc::Yes {
                witness: gram_doc(w),
            },
            PsdVerdict::No => PsdDoc::No,
            PsdVerdict::Unknown => PsdDoc::Unknown,
        },
        q_closed_semiring: r.q_closed_semiring,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LuDoc {
    #[serde(rename = "L")]
    pub l: MatrixDoc,
    #[serde(rename = "U")]
    pub u: MatrixDoc,
}

pub fn lu_doc<S: Semiring>(f: &LuFactors<S>) -> LuDoc {
    LuDoc {
        l: matrix_to_doc(&f.l),
        u: matrix_to_doc(&f.u),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub solution: Vec<String>,
    pub residual_verified: bool,
}

pub fn solution_doc<S: Semiring>(sol: &Solution<S>) -> SolutionDoc {
    SolutionDoc {
        solution: sol.y.names(),
        residual_verified: sol.residual_verified,
    }
}
