//! Schur complements of the leading entry, Cholesky and LU factorization.
//!
//! Both factorizations peel off the leading entry `a` of the working matrix
//! `[[a, rᵀ], [b, C]]` and continue on `C + a⁻¹·(−b)·rᵀ`. The negation `−b`
//! only exists when `b ∈ V(S)ⁿ⁻¹`, which strong invertibility guarantees.

use std::sync::Arc;

use crate::classify::{numerical_range, NnrVerdict, DEFAULT_NNR_BOUND};
use crate::enumerate::{guarded_count, Tuples};
use crate::error::{Error, Result};
use crate::matrix::{ElemVec, Matrix, StrongInvertibility};
use crate::semiring::Semiring;

/// Which hypotheses were confirmed for a Cholesky result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisLevel {
    /// Only the per-step conditions: invertible square pivots and
    /// negatable sub-diagonal columns.
    #[default]
    Local,
    /// Strong invertibility and nonnegative numerical range of the input.
    Theorem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CholeskyStatus<E> {
    Success,
    NotSymmetric,
    /// The leading principal submatrix of size `k` is singular.
    NotStronglyInvertible {
        k: usize,
    },
    /// The pivot at `step` (0-based) is invertible but not a square.
    PivotNotSquare {
        step: usize,
        pivot: E,
    },
    /// Row `index` of the column below the pivot at `step` has no negation.
    SubdiagonalNotNegatable {
        step: usize,
        index: usize,
    },
}

impl<E> CholeskyStatus<E> {
    pub fn is_success(&self) -> bool {
        matches!(self, CholeskyStatus::Success)
    }
}

#[derive(Debug, Clone)]
pub struct CholeskyResult<S: Semiring> {
    pub status: CholeskyStatus<S::Elem>,
    /// Lower-triangular `L` with `L·Lᵀ = M`, on success.
    pub factor: Option<Matrix<S>>,
    /// The square root chosen at each step.
    pub pivots: Vec<S::Elem>,
    pub verified: HypothesisLevel,
    /// Filled in when theorem-level verification was requested.
    pub numerical_range: Option<NnrVerdict<S::Elem>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CholeskyOptions {
    pub verify: HypothesisLevel,
    /// Entry bound for the numerical range search over infinite semirings.
    pub nnr_bound: usize,
}

impl Default for CholeskyOptions {
    fn default() -> Self {
        CholeskyOptions {
            verify: HypothesisLevel::Local,
            nnr_bound: DEFAULT_NNR_BOUND,
        }
    }
}

/// A diagonal `D` with `D² = I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalInvolution<S: Semiring> {
    pub diagonal: ElemVec<S>,
}

impl<S: Semiring> DiagonalInvolution<S> {
    pub fn to_matrix(&self) -> Matrix<S> {
        Matrix::diagonal(self.diagonal.semiring(), self.diagonal.entries())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LuFactors<S: Semiring> {
    /// Unit lower triangular.
    pub l: Matrix<S>,
    /// Upper triangular with invertible diagonal.
    pub u: Matrix<S>,
}

/// One elimination step on `[[a, rᵀ], [b, C]]`.
struct Step<E> {
    a_inv: E,
    b: Vec<E>,
    neg_b: Vec<E>,
}

enum StepError {
    PivotNotInvertible,
    NotNegatable(usize),
}

fn eliminate<S: Semiring>(m: &Matrix<S>) -> std::result::Result<Step<S::Elem>, StepError> {
    let s = m.semiring();
    let a_inv = s
        .inverse(m.get(0, 0))
        .ok_or(StepError::PivotNotInvertible)?;
    let b: Vec<_> = (1..m.rows()).map(|i| m.get(i, 0).clone()).collect();
    let neg_b = b
        .iter()
        .enumerate()
        .map(|(i, bi)| s.negate(bi).ok_or(StepError::NotNegatable(i + 1)))
        .collect::<std::result::Result<_, _>>()?;
    Ok(Step { a_inv, b, neg_b })
}

/// `C + a⁻¹·(−b)·rᵀ`, with `r` the first row right of the pivot.
fn complement<S: Semiring>(m: &Matrix<S>, step: &Step<S::Elem>) -> Matrix<S> {
    let s = m.semiring();
    let n = m.rows();
    let scaled: Vec<_> = step.neg_b.iter().map(|nb| s.mul(&step.a_inv, nb)).collect();
    Matrix::from_fn(s, n - 1, n - 1, |i, j| {
        s.add(m.get(i + 1, j + 1), &s.mul(&scaled[i], m.get(0, j + 1)))
    })
}

fn require_block(m: &Matrix<impl Semiring>) -> Result<()> {
    if !m.is_square() || m.rows() < 2 {
        return Err(Error::ShapeMismatch(format!(
            "Schur complement needs a square matrix of size >= 2, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn step_or_error<S: Semiring>(m: &Matrix<S>) -> Result<Step<S::Elem>> {
    let s = m.semiring();
    eliminate(m).map_err(|e| match e {
        StepError::PivotNotInvertible => Error::PivotNotInvertible {
            pivot: s.name(m.get(0, 0)),
        },
        StepError::NotNegatable(index) => Error::SubdiagonalNotNegatable {
            index,
            value: s.name(m.get(index, 0)),
        },
    })
}

/// The Schur complement `M/a = C + a⁻¹·(−b)·bᵀ` of the leading entry.
///
/// For non-symmetric input the first row takes the place of `bᵀ`.
pub fn schur_complement<S: Semiring>(m: &Matrix<S>) -> Result<Matrix<S>> {
    require_block(m)?;
    let step = step_or_error(m)?;
    Ok(complement(m, &step))
}

/// `[[1, 0], [a⁻¹·v, I]]` of size `n`.
fn unit_lower_column<S: Semiring>(s: &Arc<S>, a_inv: &S::Elem, v: &[S::Elem]) -> Matrix<S> {
    let n = v.len() + 1;
    let mut e = Matrix::identity(s, n);
    for (i, vi) in v.iter().enumerate() {
        e.set(i + 1, 0, s.mul(a_inv, vi));
    }
    e
}

/// Check the block identity behind the Schur complement:
/// `E·M·Eᵀ = diag(a, M/a)` for `E = [[1, 0], [a⁻¹(−b), I]]`, and
/// `[[1, 0], [a⁻¹b, I]]·E = I`.
pub fn verify_schur_identity<S: Semiring>(m: &Matrix<S>) -> Result<bool> {
    require_block(m)?;
    let step = step_or_error(m)?;
    let s = m.semiring();
    let n = m.rows();
    let schur = complement(m, &step);

    let e = unit_lower_column(s, &step.a_inv, &step.neg_b);
    let e_inv = unit_lower_column(s, &step.a_inv, &step.b);
    let congruent = e.mul(m)?.mul(&e.transpose())?;
    let block_diag = Matrix::from_fn(s, n, n, |i, j| match (i, j) {
        (0, 0) => m.get(0, 0).clone(),
        (0, _) | (_, 0) => s.zero(),
        _ => schur.get(i - 1, j - 1).clone(),
    });
    Ok(congruent == block_diag && e_inv.mul(&e)?.is_identity())
}

/// Cholesky factorization with default options (local verification).
pub fn cholesky<S: Semiring>(m: &Matrix<S>) -> Result<CholeskyResult<S>> {
    cholesky_with(m, CholeskyOptions::default())
}

/// Factor a symmetric `M` as `L·Lᵀ` with `L` lower triangular.
///
/// Each step takes the leading entry `a` of the working matrix, requires
/// `a ∈ U(S) ∩ Q(S)`, picks the preferred root `k`, writes `k` and
/// `k⁻¹·b` into the next column of `L`, and continues on `M/a`.
pub fn cholesky_with<S: Semiring>(
    m: &Matrix<S>,
    opts: CholeskyOptions,
) -> Result<CholeskyResult<S>> {
    let fail = |status, pivots, numerical_range| CholeskyResult {
        status,
        factor: None,
        pivots,
        verified: HypothesisLevel::Local,
        numerical_range,
    };
    if !m.is_symmetric() {
        return Ok(fail(CholeskyStatus::NotSymmetric, Vec::new(), None));
    }

    let mut numerical = None;
    let mut theorem_holds = false;
    if opts.verify == HypothesisLevel::Theorem {
        if let StrongInvertibility::FailsAt(k) = m.strong_invertibility()? {
            return Ok(fail(
                CholeskyStatus::NotStronglyInvertible { k },
                Vec::new(),
                None,
            ));
        }
        let verdict = numerical_range(m, opts.nnr_bound)?;
        theorem_holds = verdict.is_yes();
        numerical = Some(verdict);
    }

    let s = m.semiring();
    let n = m.rows();
    let mut factor = Matrix::zero(s, n, n);
    let mut pivots = Vec::with_capacity(n);
    let mut work = m.clone();
    for step in 0..n {
        let a = work.get(0, 0).clone();
        let Some(a_inv) = s.inverse(&a) else {
            return Ok(fail(
                CholeskyStatus::NotStronglyInvertible { k: step + 1 },
                pivots,
                numerical,
            ));
        };
        let Some(k) = s.preferred_root(&a) else {
            return Ok(fail(
                CholeskyStatus::PivotNotSquare { step, pivot: a },
                pivots,
                numerical,
            ));
        };
        // k² = a with a a unit, so k·a⁻¹ inverts k
        let k_inv = s.mul(&k, &a_inv);
        factor.set(step, step, k.clone());
        pivots.push(k);
        if step + 1 == n {
            break;
        }
        let elim = match eliminate(&work) {
            Ok(e) => e,
            Err(StepError::NotNegatable(i)) => {
                let status = CholeskyStatus::SubdiagonalNotNegatable {
                    step,
                    index: step + i,
                };
                return Ok(fail(status, pivots, numerical));
            }
            Err(StepError::PivotNotInvertible) => unreachable!("pivot checked above"),
        };
        for (i, bi) in elim.b.iter().enumerate() {
            factor.set(step + 1 + i, step, s.mul(&k_inv, bi));
        }
        work = complement(&work, &elim);
    }

    let product = factor.mul(&factor.transpose())?;
    if product != *m {
        return Err(Error::Internal(format!(
            "L·Lᵀ = {product} differs from M = {m}"
        )));
    }
    Ok(CholeskyResult {
        status: CholeskyStatus::Success,
        factor: Some(factor),
        pivots,
        verified: if theorem_holds {
            HypothesisLevel::Theorem
        } else {
            HypothesisLevel::Local
        },
        numerical_range: numerical,
    })
}

/// Every lower-triangular `L` (invertible or not) with `L·Lᵀ = M`, in
/// canonical order.
///
/// Rows of `L` are chosen one at a time; row `i` must reproduce
/// `M[i][0..=i]` against the rows already fixed.
pub fn all_cholesky_factors<S: Semiring>(m: &Matrix<S>) -> Result<Vec<Matrix<S>>> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch("expected a square matrix".into()));
    }
    let s = m.semiring();
    let elems = s.elements().ok_or(Error::NotEnumerable)?;
    let n = m.rows();
    guarded_count(elems.len(), n * (n + 1) / 2)?;
    if !m.is_symmetric() {
        return Ok(Vec::new());
    }

    let candidates: Vec<Vec<Vec<S::Elem>>> = (0..n)
        .map(|i| Tuples::new(elems, i + 1).collect())
        .collect();
    let mut rows: Vec<Vec<S::Elem>> = Vec::with_capacity(n);
    let mut out = Vec::new();
    extend_factor(m, &candidates, &mut rows, &mut out);
    Ok(out)
}

fn extend_factor<S: Semiring>(
    m: &Matrix<S>,
    candidates: &[Vec<Vec<S::Elem>>],
    rows: &mut Vec<Vec<S::Elem>>,
    out: &mut Vec<Matrix<S>>,
) {
    let s = m.semiring();
    let n = m.rows();
    let i = rows.len();
    if i == n {
        out.push(Matrix::from_fn(s, n, n, |r, c| {
            rows[r].get(c).cloned().unwrap_or_else(|| s.zero())
        }));
        return;
    }
    for row in &candidates[i] {
        let fits = (0..=i).all(|j| {
            let other = if j == i { row } else { &rows[j] };
            s.dot(row.iter().zip(other.iter())) == *m.get(i, j)
        });
        if fits {
            rows.push(row.clone());
            extend_factor(m, candidates, rows, out);
            rows.pop();
        }
    }
}

/// All diagonal `D` of size `n` with `D² = I`: each entry ranges over the
/// square roots of one.
pub fn diagonal_involutions<S: Semiring>(
    s: &Arc<S>,
    n: usize,
) -> Result<Vec<DiagonalInvolution<S>>> {
    if !s.is_finite() {
        return Err(Error::NotEnumerable);
    }
    let roots = s.square_roots(&s.one());
    guarded_count(roots.len(), n)?;
    Ok(Tuples::new(&roots, n)
        .map(|d| DiagonalInvolution {
            diagonal: ElemVec::new(s, d),
        })
        .collect())
}

/// `M = L·U` for strongly invertible `M`, with `L` unit lower triangular
/// and `U` upper triangular with invertible diagonal.
pub fn lu<S: Semiring>(m: &Matrix<S>) -> Result<LuFactors<S>> {
    if let StrongInvertibility::FailsAt(k) = m.strong_invertibility()? {
        return Err(Error::StronglyInvertibleRequired { k });
    }
    let s = m.semiring();
    let n = m.rows();
    let mut l = Matrix::identity(s, n);
    let mut u = Matrix::zero(s, n, n);
    let mut work = m.clone();
    for step in 0..n {
        for j in 0..n - step {
            u.set(step, step + j, work.get(0, j).clone());
        }
        if step + 1 == n {
            break;
        }
        let elim = eliminate(&work).map_err(|e| match e {
            StepError::PivotNotInvertible => Error::Internal(format!(
                "pivot {step} of a strongly invertible matrix is singular"
            )),
            StepError::NotNegatable(i) => Error::SubdiagonalNotNegatable {
                index: step + i,
                value: s.name(work.get(i, 0)),
            },
        })?;
        for (i, bi) in elim.b.iter().enumerate() {
            l.set(step + 1 + i, step, s.mul(&elim.a_inv, bi));
        }
        work = complement(&work, &elim);
    }
    if l.mul(&u)? != *m {
        return Err(Error::Internal("L·U differs from M".into()));
    }
    Ok(LuFactors { l, u })
}
