//! Triangular solves and `M·y = c` via Cholesky or LU factors.
//!
//! There is no subtraction in a semiring. Substitution instead adds the
//! stored negation of each off-diagonal entry, which exists only because
//! the factors produced here have their strictly triangular entries in
//! `V(S)` and their diagonal in `U(S)`. Arbitrary triangular matrices are
//! rejected with `StructureViolation`.

use crate::error::{Error, Result};
use crate::factorization::{cholesky, lu, CholeskyStatus};
use crate::matrix::{ElemVec, Matrix};
use crate::semiring::Semiring;

/// A solution together with the outcome of the exact residual check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<S: Semiring> {
    pub y: ElemVec<S>,
    pub residual_verified: bool,
}

fn check_system<S: Semiring>(m: &Matrix<S>, c: &ElemVec<S>) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(
            "triangular solve needs a square matrix".into(),
        ));
    }
    if c.len() != m.rows() {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side of length {} for a {}x{} system",
            c.len(),
            m.rows(),
            m.cols()
        )));
    }
    if **m.semiring() != **c.semiring() {
        return Err(Error::SemiringMismatch);
    }
    Ok(m.rows())
}

/// Solve `T·y = c` where `T` is triangular; `order` lists the rows in
/// substitution order and `solved(i)` the columns already determined when
/// row `i` is reached.
fn substitute<S: Semiring>(
    t: &Matrix<S>,
    c: &ElemVec<S>,
    order: impl Iterator<Item = usize>,
    solved: impl Fn(usize) -> std::ops::Range<usize>,
) -> Result<ElemVec<S>> {
    let s = t.semiring();
    let n = t.rows();
    let mut y = vec![s.zero(); n];
    for i in order {
        let d = t.get(i, i);
        let d_inv = s.inverse(d).ok_or_else(|| {
            Error::StructureViolation(format!(
                "diagonal entry ({i}, {i}) = {} is not a unit",
                s.name(d)
            ))
        })?;
        let mut acc = c.entries()[i].clone();
        for j in solved(i) {
            let neg = s.negate(t.get(i, j)).ok_or_else(|| {
                Error::StructureViolation(format!(
                    "entry ({i}, {j}) = {} has no negation",
                    s.name(t.get(i, j))
                ))
            })?;
            acc = s.add(&acc, &s.mul(&neg, &y[j]));
        }
        y[i] = s.mul(&d_inv, &acc);
    }
    Ok(ElemVec::new(s, y))
}

/// `yᵢ = Lᵢᵢ⁻¹·(cᵢ + Σⱼ<ᵢ (−Lᵢⱼ)·yⱼ)`.
pub fn forward_substitute<S: Semiring>(l: &Matrix<S>, c: &ElemVec<S>) -> Result<ElemVec<S>> {
    let n = check_system(l, c)?;
    if !l.is_lower_triangular() {
        return Err(Error::StructureViolation(
            "matrix is not lower triangular".into(),
        ));
    }
    substitute(l, c, 0..n, |i| 0..i)
}

/// `yᵢ = Uᵢᵢ⁻¹·(cᵢ + Σⱼ>ᵢ (−Uᵢⱼ)·yⱼ)`.
pub fn backward_substitute<S: Semiring>(u: &Matrix<S>, c: &ElemVec<S>) -> Result<ElemVec<S>> {
    let n = check_system(u, c)?;
    if !u.is_upper_triangular() {
        return Err(Error::StructureViolation(
            "matrix is not upper triangular".into(),
        ));
    }
    substitute(u, c, (0..n).rev(), move |i| i + 1..n)
}

fn verified<S: Semiring>(m: &Matrix<S>, c: &ElemVec<S>, y: ElemVec<S>) -> Result<Solution<S>> {
    if m.mul_vec(&y)? != *c {
        return Err(Error::Internal(format!(
            "nonzero residual: M·{y:?} != {c:?}"
        )));
    }
    Ok(Solution {
        y,
        residual_verified: true,
    })
}

/// Solve `M·y = c` through `M = L·Lᵀ`.
pub fn solve_spd<S: Semiring>(m: &Matrix<S>, c: &ElemVec<S>) -> Result<Solution<S>> {
    check_system(m, c)?;
    let result = cholesky(m)?;
    let Some(l) = result.factor else {
        let s = m.semiring();
        let reason = match result.status {
            CholeskyStatus::NotSymmetric => "matrix is not symmetric".to_string(),
            CholeskyStatus::NotStronglyInvertible { k } => {
                format!("leading submatrix of size {k} is singular")
            }
            CholeskyStatus::PivotNotSquare { step, pivot } => {
                format!("pivot {} at step {step} is not a square", s.name(&pivot))
            }
            CholeskyStatus::SubdiagonalNotNegatable { step, index } => {
                format!("entry {index} below pivot {step} has no negation")
            }
            CholeskyStatus::Success => unreachable!("success always carries a factor"),
        };
        return Err(Error::NoFactorization(reason));
    };
    let z = forward_substitute(&l, c)?;
    let y = backward_substitute(&l.transpose(), &z)?;
    verified(m, c, y)
}

/// Solve `M·y = c` through `M = L·U` for strongly invertible `M`.
pub fn solve_lu<S: Semiring>(m: &Matrix<S>, c: &ElemVec<S>) -> Result<Solution<S>> {
    check_system(m, c)?;
    let f = lu(m)?;
    let z = forward_substitute(&f.l, c)?;
    let y = backward_substitute(&f.u, &z)?;
    verified(m, c, y)
}
