//! Deciders for nonnegative numerical range, positive semidefiniteness and
//! the "sums of squares are squares" property, plus the three-way
//! equivalence check that holds over semirings with that property.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::enumerate::{guarded_count, symmetric_matrices, upper_index, Tuples};
use crate::error::{Error, Result};
use crate::factorization::{all_cholesky_factors, cholesky};
use crate::matrix::{ElemVec, Matrix, StrongInvertibility};
use crate::semiring::Semiring;

/// Entry bound for numerical range searches over `ℕ`.
pub const DEFAULT_NNR_BOUND: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NnrVerdict<E> {
    Yes,
    /// `xᵀ·M·x = value` is not a square.
    No {
        witness: Vec<E>,
        value: E,
    },
    /// No counter-witness with entries up to `bound`; the semiring is infinite.
    Unknown {
        bound: usize,
    },
}

impl<E> NnrVerdict<E> {
    pub fn is_yes(&self) -> bool {
        matches!(self, NnrVerdict::Yes)
    }

    pub fn is_no(&self) -> bool {
        matches!(self, NnrVerdict::No { .. })
    }
}

/// `M = Σ mᵢ·vᵢ·vᵢᵀ`: the columns of some `B` with `M = B·Bᵀ`, grouped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramWitness<S: Semiring> {
    pub generators: Vec<ElemVec<S>>,
    pub multiplicity: Vec<usize>,
}

impl<S: Semiring> GramWitness<S> {
    fn from_columns(s: &Arc<S>, n: usize, columns: impl IntoIterator<Item = Vec<S::Elem>>) -> Self {
        let mut generators: Vec<Vec<S::Elem>> = Vec::new();
        let mut multiplicity = Vec::new();
        for col in columns {
            match generators.iter().position(|g| *g == col) {
                Some(i) => multiplicity[i] += 1,
                None => {
                    generators.push(col);
                    multiplicity.push(1);
                }
            }
        }
        debug_assert!(generators.iter().all(|g| g.len() == n));
        GramWitness {
            generators: generators.into_iter().map(|g| ElemVec::new(s, g)).collect(),
            multiplicity,
        }
    }

    /// The matrix `B` whose columns are the generators, repeated.
    /// An empty witness yields a single zero column.
    pub fn to_b(&self, s: &Arc<S>, n: usize) -> Matrix<S> {
        let columns: Vec<&ElemVec<S>> = self
            .generators
            .iter()
            .zip(&self.multiplicity)
            .flat_map(|(g, &m)| std::iter::repeat_n(g, m))
            .collect();
        if columns.is_empty() {
            return Matrix::zero(s, n, 1);
        }
        Matrix::from_fn(s, n, columns.len(), |i, j| columns[j].entries()[i].clone())
    }

    /// `B·Bᵀ`.
    pub fn resum(&self, s: &Arc<S>, n: usize) -> Matrix<S> {
        let b = self.to_b(s, n);
        b.mul(&b.transpose()).expect("B·Bᵀ is always conformable")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsdVerdict<S: Semiring> {
    Yes(GramWitness<S>),
    No,
    /// Infinite semiring with no witness found, or search space over the guard.
    Unknown,
}

impl<S: Semiring> PsdVerdict<S> {
    pub fn is_yes(&self) -> bool {
        matches!(self, PsdVerdict::Yes(_))
    }
}

/// Whether `xᵀ·M·x ∈ Q(S)` for all `x`, using the default bound over `ℕ`.
pub fn has_nonneg_numerical_range<S: Semiring>(m: &Matrix<S>) -> Result<NnrVerdict<S::Elem>> {
    numerical_range(m, DEFAULT_NNR_BOUND)
}

/// Exhaustive over `Sⁿ` for finite semirings; over `ℕ`, every `x` with
/// entries `≤ bound`. The first counter-witness in canonical order wins.
pub fn numerical_range<S: Semiring>(m: &Matrix<S>, bound: usize) -> Result<NnrVerdict<S::Elem>> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(
            "numerical range needs a square matrix".into(),
        ));
    }
    let s = m.semiring();
    let n = m.rows();
    let alphabet = match s.elements() {
        Some(all) => all.to_vec(),
        None => s.sample(bound),
    };
    guarded_count(alphabet.len(), n)?;
    for x in Tuples::new(&alphabet, n) {
        let value = m.quadratic_form(&x);
        if !s.is_square(&value) {
            return Ok(NnrVerdict::No { witness: x, value });
        }
    }
    Ok(if s.is_finite() {
        NnrVerdict::Yes
    } else {
        NnrVerdict::Unknown { bound }
    })
}

/// The additive closure of `{ v·vᵀ : v ∈ Sⁿ }` inside the symmetric `n×n`
/// matrices over a finite semiring: exactly the positive semidefinite ones.
///
/// States are symmetric matrices encoded q-ary over their upper triangle;
/// the fixpoint is a breadth-first search from the zero matrix.
pub struct GramClosure<S: Semiring> {
    semiring: Arc<S>,
    n: usize,
    q: usize,
    add: Vec<usize>,
    /// Upper triangle digits and a representative `v` per distinct `v·vᵀ`.
    generators: Vec<(Vec<usize>, Vec<S::Elem>)>,
    visited: Vec<u64>,
    parent: HashMap<u64, (u64, usize)>,
}

impl<S: Semiring> GramClosure<S> {
    pub fn build(s: &Arc<S>, n: usize) -> Result<Self> {
        let elems = s.elements().ok_or(Error::NotEnumerable)?;
        let q = elems.len();
        let len = n * (n + 1) / 2;
        let total = guarded_count(q, len)? as usize;
        guarded_count(q, n)?;
        let index_of = |e: &S::Elem| {
            elems
                .binary_search(e)
                .ok()
                .or_else(|| elems.iter().position(|x| x == e))
                .expect("element of the carrier")
        };
        let mut add = vec![0; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = index_of(&s.add(a, b));
            }
        }

        let mut generators: Vec<(Vec<usize>, Vec<S::Elem>)> = Vec::new();
        for v in Tuples::new(elems, n) {
            let mut digits = vec![0; len];
            for i in 0..n {
                for j in i..n {
                    digits[upper_index(n, i, j)] = index_of(&s.mul(&v[i], &v[j]));
                }
            }
            if !generators.iter().any(|(d, _)| *d == digits) {
                generators.push((digits, v));
            }
        }

        let mut closure = GramClosure {
            semiring: Arc::clone(s),
            n,
            q,
            add,
            generators,
            visited: vec![0; total.div_ceil(64)],
            parent: HashMap::new(),
        };
        closure.saturate();
        Ok(closure)
    }

    fn encode(&self, digits: &[usize]) -> u64 {
        digits
            .iter()
            .fold(0u64, |acc, &d| acc * self.q as u64 + d as u64)
    }

    fn decode(&self, mut code: u64) -> Vec<usize> {
        let len = self.n * (self.n + 1) / 2;
        let mut digits = vec![0; len];
        for d in digits.iter_mut().rev() {
            *d = (code % self.q as u64) as usize;
            code /= self.q as u64;
        }
        digits
    }

    fn mark(&mut self, code: u64) -> bool {
        let (word, bit) = ((code / 64) as usize, code % 64);
        let fresh = self.visited[word] & (1 << bit) == 0;
        self.visited[word] |= 1 << bit;
        fresh
    }

    fn is_marked(&self, code: u64) -> bool {
        self.visited[(code / 64) as usize] & (1 << (code % 64)) != 0
    }

    fn saturate(&mut self) {
        let zero_index = {
            let elems = self.semiring.elements().expect("finite");
            let z = self.semiring.zero();
            elems.iter().position(|e| *e == z).expect("zero in carrier")
        };
        let start = self.encode(&vec![zero_index; self.n * (self.n + 1) / 2]);
        self.mark(start);
        let mut queue = VecDeque::from([start]);
        while let Some(code) = queue.pop_front() {
            let digits = self.decode(code);
            for g in 0..self.generators.len() {
                let next: Vec<usize> = digits
                    .iter()
                    .zip(&self.generators[g].0)
                    .map(|(&a, &b)| self.add[a * self.q + b])
                    .collect();
                let next = self.encode(&next);
                if self.mark(next) {
                    self.parent.insert(next, (code, g));
                    queue.push_back(next);
                }
            }
        }
    }

    fn code_of(&self, m: &Matrix<S>) -> Option<u64> {
        if m.rows() != self.n || !m.is_symmetric() || **m.semiring() != *self.semiring {
            return None;
        }
        let elems = self.semiring.elements().expect("finite");
        let mut digits = vec![0; self.n * (self.n + 1) / 2];
        for i in 0..self.n {
            for j in i..self.n {
                digits[upper_index(self.n, i, j)] = elems.iter().position(|e| e == m.get(i, j))?;
            }
        }
        Some(self.encode(&digits))
    }

    pub fn contains(&self, m: &Matrix<S>) -> bool {
        self.code_of(m).is_some_and(|c| self.is_marked(c))
    }

    /// Number of positive semidefinite matrices of this size.
    pub fn len(&self) -> usize {
        self.visited.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn verdict(&self, m: &Matrix<S>) -> PsdVerdict<S> {
        let Some(mut code) = self.code_of(m).filter(|&c| self.is_marked(c)) else {
            return PsdVerdict::No;
        };
        let mut columns = Vec::new();
        while let Some(&(prev, g)) = self.parent.get(&code) {
            columns.push(self.generators[g].1.clone());
            code = prev;
        }
        columns.reverse();
        PsdVerdict::Yes(GramWitness::from_columns(&self.semiring, self.n, columns))
    }
}

/// Whether `M = B·Bᵀ` for some `B` with any number of columns.
///
/// Over `ℕ` only a Cholesky witness can be produced; otherwise the verdict
/// is `Unknown`.
pub fn is_positive_semidefinite<S: Semiring>(m: &Matrix<S>) -> Result<PsdVerdict<S>> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(
            "positive semidefiniteness needs a square matrix".into(),
        ));
    }
    if !m.is_symmetric() {
        return Ok(PsdVerdict::No);
    }
    let s = m.semiring();
    if s.is_finite() {
        return Ok(GramClosure::build(s, m.rows())?.verdict(m));
    }
    let result = cholesky(m)?;
    Ok(match result.factor {
        Some(l) => PsdVerdict::Yes(GramWitness::from_columns(
            s,
            m.rows(),
            (0..m.cols()).map(|j| l.column(j)),
        )),
        None => PsdVerdict::Unknown,
    })
}

/// Whether `Q(S) + Q(S) ⊆ Q(S)`.
pub fn q_closed<S: Semiring>(s: &S) -> Result<bool> {
    let elems = s.elements().ok_or(Error::NotEnumerable)?;
    let squares: Vec<&S::Elem> = elems.iter().filter(|e| s.is_square(e)).collect();
    Ok(squares
        .iter()
        .all(|a| squares.iter().all(|b| s.is_square(&s.add(a, b)))))
}

#[derive(Debug, Clone)]
pub struct ClassificationReport<S: Semiring> {
    pub symmetric: bool,
    pub invertible: bool,
    pub strongly_invertible: StrongInvertibility,
    pub nnr: NnrVerdict<S::Elem>,
    pub psd: PsdVerdict<S>,
    /// `None` for infinite semirings.
    pub q_closed_semiring: Option<bool>,
}

/// Run every decider on a square matrix. Searches that exceed the guard
/// degrade to `Unknown` instead of failing the whole report.
pub fn classify<S: Semiring>(m: &Matrix<S>, nnr_bound: usize) -> Result<ClassificationReport<S>> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(
            "classification needs a square matrix".into(),
        ));
    }
    let nnr = match numerical_range(m, nnr_bound) {
        Err(Error::SearchTooLarge { .. }) => NnrVerdict::Unknown { bound: nnr_bound },
        other => other?,
    };
    let psd = match is_positive_semidefinite(m) {
        Err(Error::SearchTooLarge { .. }) => PsdVerdict::Unknown,
        other => other?,
    };
    Ok(ClassificationReport {
        symmetric: m.is_symmetric(),
        invertible: m.is_invertible()?,
        strongly_invertible: m.strong_invertibility()?,
        nnr,
        psd,
        q_closed_semiring: q_closed(m.semiring().as_ref()).ok(),
    })
}

/// A symmetric matrix on which the three equivalent conditions disagree.
#[derive(Debug, Clone)]
pub struct CorollaryViolation<S: Semiring> {
    pub matrix: Matrix<S>,
    /// Strongly invertible with nonnegative numerical range.
    pub nnr_side: bool,
    /// Some strongly invertible lower-triangular `L` has `L·Lᵀ = M`.
    pub cholesky_side: bool,
    /// Strongly invertible and positive semidefinite.
    pub psd_side: bool,
}

#[derive(Debug, Clone)]
pub struct CorollaryReport<S: Semiring> {
    pub n: usize,
    pub checked: usize,
    /// Matrices on which all three conditions hold.
    pub satisfying: usize,
    pub violations: Vec<CorollaryViolation<S>>,
}

/// Over a semiring where sums of squares are squares, check on every
/// symmetric `n×n` matrix that (1) strongly invertible with nonnegative
/// numerical range, (2) `M = L·Lᵀ` for a strongly invertible lower
/// triangular `L`, and (3) strongly invertible and positive semidefinite
/// agree.
pub fn corollary_equivalence_check<S: Semiring>(
    s: &Arc<S>,
    n: usize,
) -> Result<CorollaryReport<S>> {
    if !q_closed(s.as_ref())? {
        return Err(Error::HypothesisNotSatisfied(format!(
            "sums of squares are not squares in {}",
            s.label()
        )));
    }
    let closure = GramClosure::build(s, n)?;
    let mut report = CorollaryReport {
        n,
        checked: 0,
        satisfying: 0,
        violations: Vec::new(),
    };
    for m in symmetric_matrices(s, n)? {
        report.checked += 1;
        let strongly = m.is_strongly_invertible()?;
        let nnr_side = strongly && numerical_range(&m, DEFAULT_NNR_BOUND)?.is_yes();
        let psd_side = strongly && closure.contains(&m);
        let mut cholesky_side = false;
        for l in all_cholesky_factors(&m)? {
            if l.is_strongly_invertible()? {
                cholesky_side = true;
                break;
            }
        }
        if nnr_side == cholesky_side && cholesky_side == psd_side {
            report.satisfying += usize::from(nnr_side);
        } else {
            report.violations.push(CorollaryViolation {
                matrix: m,
                nnr_side,
                cholesky_side,
                psd_side,
            });
        }
    }
    Ok(report)
}
