use std::fmt;

use thiserror::Error;

/// The axiom families checked when validating Cayley tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    AddAssociative,
    MulAssociative,
    AddCommutative,
    MulCommutative,
    AddIdentity,
    MulIdentity,
    Distributive,
    Annihilation,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::AddAssociative => "additive associativity",
            Axiom::MulAssociative => "multiplicative associativity",
            Axiom::AddCommutative => "additive commutativity",
            Axiom::MulCommutative => "multiplicative commutativity",
            Axiom::AddIdentity => "additive identity",
            Axiom::MulIdentity => "multiplicative identity",
            Axiom::Distributive => "distributivity",
            Axiom::Annihilation => "annihilation by zero",
        };
        f.write_str(name)
    }
}

/// One failing axiom instance, witnessed by a triple of element indices.
///
/// Axioms that only involve one or two elements repeat the last index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: [u32; 3],
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.witness;
        write!(f, "{} fails at ({a}, {b}, {c})", self.axiom)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("{} axiom violation(s), first: {}", .0.len(), .0[0])]
    AxiomViolations(Vec<AxiomViolation>),

    #[error("semiring is not enumerable")]
    NotEnumerable,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("operands are over different semirings")]
    SemiringMismatch,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("matrix is not invertible (column {column} has no solution)")]
    NotInvertible { column: usize },

    #[error("search space of {candidates} candidates exceeds the guard of {guard}")]
    SearchTooLarge { candidates: u128, guard: u128 },

    #[error("pivot {pivot} is not invertible")]
    PivotNotInvertible { pivot: String },

    #[error("sub-diagonal entry {index} ({value}) has no additive inverse")]
    SubdiagonalNotNegatable { index: usize, value: String },

    #[error("matrix is not strongly invertible (leading submatrix of size {k} is singular)")]
    StronglyInvertibleRequired { k: usize },

    #[error("triangular structure violated: {0}")]
    StructureViolation(String),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),

    #[error("no Cholesky factor: {0}")]
    NoFactorization(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
