//! Canonical-order enumeration of vectors and structured matrices over a
//! finite semiring.
//!
//! Every exhaustive decider in the crate walks its space through these
//! iterators, so "first witness" always means first in lexicographic order
//! of element indices (last coordinate fastest).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::semiring::Semiring;

/// Upper bound on the number of candidates any exhaustive search visits.
pub const SEARCH_GUARD: u128 = 10_000_000;

/// `q^len`, or `SearchTooLarge` when it exceeds [`SEARCH_GUARD`].
pub fn guarded_count(q: usize, len: usize) -> Result<u128> {
    let mut total: u128 = 1;
    for _ in 0..len {
        total = total.saturating_mul(q as u128);
        if total > SEARCH_GUARD {
            let candidates = (q as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
            return Err(Error::SearchTooLarge {
                candidates,
                guard: SEARCH_GUARD,
            });
        }
    }
    Ok(total)
}

/// All tuples of length `len` over `alphabet`, lexicographically.
#[derive(Debug, Clone)]
pub struct Tuples<'a, E> {
    alphabet: &'a [E],
    digits: Vec<usize>,
    done: bool,
}

impl<'a, E: Clone> Tuples<'a, E> {
    pub fn new(alphabet: &'a [E], len: usize) -> Self {
        Tuples {
            alphabet,
            digits: vec![0; len],
            done: alphabet.is_empty() && len > 0,
        }
    }
}

impl<E: Clone> Iterator for Tuples<'_, E> {
    type Item = Vec<E>;

    fn next(&mut self) -> Option<Vec<E>> {
        if self.done {
            return None;
        }
        let out = self
            .digits
            .iter()
            .map(|&d| self.alphabet[d].clone())
            .collect();
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.alphabet.len() {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(out)
    }
}

fn elements_of<S: Semiring>(s: &S) -> Result<&[S::Elem]> {
    s.elements().ok_or(Error::NotEnumerable)
}

/// Every vector in `Sⁿ`.
pub fn vectors<S: Semiring>(s: &S, n: usize) -> Result<Tuples<'_, S::Elem>> {
    let elems = elements_of(s)?;
    guarded_count(elems.len(), n)?;
    Ok(Tuples::new(elems, n))
}

/// Every symmetric `n×n` matrix, keyed by its upper triangle in row-major
/// order.
pub fn symmetric_matrices<S: Semiring>(
    s: &Arc<S>,
    n: usize,
) -> Result<impl Iterator<Item = Matrix<S>> + '_> {
    let elems = elements_of(s.as_ref())?;
    guarded_count(elems.len(), n * (n + 1) / 2)?;
    Ok(Tuples::new(elems, n * (n + 1) / 2).map(move |upper| symmetric_from_upper(s, n, &upper)))
}

/// Every lower-triangular `n×n` matrix, keyed by its lower triangle in
/// row-major order.
pub fn lower_triangular_matrices<S: Semiring>(
    s: &Arc<S>,
    n: usize,
) -> Result<impl Iterator<Item = Matrix<S>> + '_> {
    let elems = elements_of(s.as_ref())?;
    guarded_count(elems.len(), n * (n + 1) / 2)?;
    Ok(Tuples::new(elems, n * (n + 1) / 2).map(move |lower| {
        let mut it = lower.into_iter();
        Matrix::from_fn(s, n, n, |i, j| {
            if j <= i {
                it.next().expect("lower triangle length")
            } else {
                s.zero()
            }
        })
    }))
}

pub(crate) fn symmetric_from_upper<S: Semiring>(
    s: &Arc<S>,
    n: usize,
    upper: &[S::Elem],
) -> Matrix<S> {
    Matrix::from_fn(s, n, n, |i, j| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        upper[upper_index(n, i, j)].clone()
    })
}

/// Position of `(i, j)`, `i ≤ j`, in the row-major upper triangle.
pub(crate) fn upper_index(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + j
}
