//! Exhaustive search for symmetric matrices matching a conjunction of
//! predicate literals, e.g. `strongly-invertible,nnr,!cholesky`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::classify::{numerical_range, GramClosure};
use crate::enumerate::symmetric_matrices;
use crate::error::{Error, Result};
use crate::factorization::{all_cholesky_factors, cholesky};
use crate::matrix::Matrix;
use crate::semiring::Semiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    Invertible,
    StronglyInvertible,
    /// Nonnegative numerical range.
    Nnr,
    /// Positive semidefinite.
    Psd,
    /// The Cholesky algorithm succeeds.
    Cholesky,
    /// Some lower-triangular `L` (invertible or not) has `L·Lᵀ = M`.
    LowerFactor,
}

impl Predicate {
    const ALL: [(&'static str, Predicate); 6] = [
        ("invertible", Predicate::Invertible),
        ("strongly-invertible", Predicate::StronglyInvertible),
        ("nnr", Predicate::Nnr),
        ("psd", Predicate::Psd),
        ("cholesky", Predicate::Cholesky),
        ("lower-factor", Predicate::LowerFactor),
    ];

    pub fn name(self) -> &'static str {
        Self::ALL
            .iter()
            .find(|(_, p)| *p == self)
            .map(|(n, _)| *n)
            .unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    pub predicate: Predicate,
    pub negated: bool,
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("!")?;
        }
        f.write_str(self.predicate.name())
    }
}

impl FromStr for Literal {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (negated, word) = match text
            .strip_prefix('!')
            .or_else(|| text.strip_prefix('¬'))
            .or_else(|| text.strip_prefix("not-"))
        {
            Some(rest) => (true, rest.trim()),
            None => (false, text),
        };
        let word = word.replace('_', "-").to_ascii_lowercase();
        Predicate::ALL
            .iter()
            .find(|(n, _)| *n == word)
            .map(|&(_, predicate)| Literal { predicate, negated })
            .ok_or_else(|| Error::Parse(format!("unknown predicate {text:?}")))
    }
}

/// Parse a conjunction: literals separated by `,`, `&` or `∧`.
pub fn parse_predicates(text: &str) -> Result<Vec<Literal>> {
    let literals = text
        .split([',', '&', '∧'])
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<_>>>()?;
    if literals.is_empty() {
        return Err(Error::Parse("empty predicate list".into()));
    }
    Ok(literals)
}

/// Evaluates literals on matrices of one size, building the positive
/// semidefinite closure at most once.
pub struct Evaluator<S: Semiring> {
    semiring: Arc<S>,
    n: usize,
    closure: Option<GramClosure<S>>,
}

impl<S: Semiring> Evaluator<S> {
    pub fn new(s: &Arc<S>, n: usize) -> Self {
        Evaluator {
            semiring: Arc::clone(s),
            n,
            closure: None,
        }
    }

    pub fn holds(&mut self, m: &Matrix<S>, predicate: Predicate) -> Result<bool> {
        Ok(match predicate {
            Predicate::Invertible => m.is_invertible()?,
            Predicate::StronglyInvertible => m.is_strongly_invertible()?,
            Predicate::Nnr => numerical_range(m, crate::classify::DEFAULT_NNR_BOUND)?.is_yes(),
            Predicate::Psd => {
                if self.closure.is_none() {
                    self.closure = Some(GramClosure::build(&self.semiring, self.n)?);
                }
                self.closure.as_ref().is_some_and(|c| c.contains(m))
            }
            Predicate::Cholesky => cholesky(m)?.status.is_success(),
            Predicate::LowerFactor => !all_cholesky_factors(m)?.is_empty(),
        })
    }

    pub fn matches(&mut self, m: &Matrix<S>, literals: &[Literal]) -> Result<bool> {
        for lit in literals {
            if self.holds(m, lit.predicate)? == lit.negated {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Stream every symmetric `n×n` matrix over `s` satisfying all literals,
/// in canonical order of the upper triangle.
pub fn search<'a, S: Semiring>(
    s: &'a Arc<S>,
    n: usize,
    literals: &'a [Literal],
) -> Result<impl Iterator<Item = Result<Matrix<S>>> + 'a> {
    if n == 0 {
        return Err(Error::ShapeMismatch("search needs n >= 1".into()));
    }
    let mut eval = Evaluator::new(s, n);
    Ok(
        symmetric_matrices(s, n)?.filter_map(move |m| match eval.matches(&m, literals) {
            Ok(true) => Some(Ok(m)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }),
    )
}
