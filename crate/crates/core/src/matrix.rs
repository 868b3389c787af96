//! Dense matrices and vectors over a semiring.

use std::fmt;
use std::sync::Arc;

use crate::enumerate::{guarded_count, Tuples};
use crate::error::{Error, Result};
use crate::semiring::Semiring;

/// A dense row-major matrix tagged with its semiring.
pub struct Matrix<S: Semiring> {
    semiring: Arc<S>,
    rows: usize,
    cols: usize,
    data: Vec<S::Elem>,
}

/// A vector in `Sⁿ`.
pub struct ElemVec<S: Semiring> {
    semiring: Arc<S>,
    entries: Vec<S::Elem>,
}

/// `M = [[a, rᵀ], [b, C]]`: the leading entry, the column below it, the row
/// to its right and the trailing principal submatrix. For symmetric `M`,
/// `first_row == b`.
#[derive(Debug)]
pub struct BlockView<S: Semiring> {
    pub a: S::Elem,
    pub b: Vec<S::Elem>,
    pub first_row: Vec<S::Elem>,
    pub c: Matrix<S>,
}

/// Outcome of the strong invertibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongInvertibility {
    Yes,
    /// The leading principal submatrix of this size (1-based) is singular.
    FailsAt(usize),
}

impl StrongInvertibility {
    pub fn holds(self) -> bool {
        self == StrongInvertibility::Yes
    }
}

fn same<S: Semiring>(a: &Arc<S>, b: &Arc<S>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<S: Semiring> Clone for Matrix<S> {
    fn clone(&self) -> Self {
        Matrix {
            semiring: Arc::clone(&self.semiring),
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }
}

impl<S: Semiring> PartialEq for Matrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && same(&self.semiring, &other.semiring)
    }
}

impl<S: Semiring> Eq for Matrix<S> {}

impl<S: Semiring> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<S: Semiring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let row: Vec<String> = self.row(i).iter().map(|e| self.semiring.name(e)).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl<S: Semiring> Matrix<S> {
    pub fn from_fn(
        s: &Arc<S>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> S::Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            semiring: Arc::clone(s),
            rows,
            cols,
            data,
        }
    }

    /// Build from rows of elements. Empty and ragged inputs are rejected.
    pub fn from_rows(s: &Arc<S>, rows: Vec<Vec<S::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::ShapeMismatch(
                "matrices must have at least one row and column".into(),
            ));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            semiring: Arc::clone(s),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from element names, e.g. `&[&["5", "2"], &["2", "1"]]`.
    pub fn from_names<R: AsRef<[&'static str]>>(s: &Arc<S>, rows: &[R]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.as_ref().iter().map(|n| s.parse_element(n)).collect())
            .collect::<Result<_>>()?;
        Self::from_rows(s, parsed)
    }

    pub fn identity(s: &Arc<S>, n: usize) -> Self {
        Self::from_fn(s, n, n, |i, j| if i == j { s.one() } else { s.zero() })
    }

    pub fn zero(s: &Arc<S>, rows: usize, cols: usize) -> Self {
        Self::from_fn(s, rows, cols, |_, _| s.zero())
    }

    pub fn diagonal(s: &Arc<S>, diag: &[S::Elem]) -> Self {
        let n = diag.len();
        Self::from_fn(
            s,
            n,
            n,
            |i, j| if i == j { diag[i].clone() } else { s.zero() },
        )
    }

    pub fn semiring(&self) -> &Arc<S> {
        &self.semiring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &S::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S::Elem) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[S::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn diag(&self) -> Vec<S::Elem> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn entries(&self) -> &[S::Elem] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<S::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn check_semiring(&self, other: &Self) -> Result<()> {
        if same(&self.semiring, &other.semiring) {
            Ok(())
        } else {
            Err(Error::SemiringMismatch)
        }
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::ShapeMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_semiring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let s = &self.semiring;
        Ok(Matrix {
            semiring: Arc::clone(s),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| s.add(a, b))
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_semiring(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let s = &self.semiring;
        Ok(Self::from_fn(s, self.rows, other.cols, |i, j| {
            s.dot((0..self.cols).map(|k| (self.get(i, k), other.get(k, j))))
        }))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.semiring, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// `M·x`.
    pub fn mul_vec(&self, x: &ElemVec<S>) -> Result<ElemVec<S>> {
        if !same(&self.semiring, &x.semiring) {
            return Err(Error::SemiringMismatch);
        }
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(ElemVec::new(&self.semiring, self.apply(&x.entries)))
    }

    pub(crate) fn apply(&self, x: &[S::Elem]) -> Vec<S::Elem> {
        (0..self.rows)
            .map(|i| self.semiring.dot(self.row(i).iter().zip(x)))
            .collect()
    }

    /// `xᵀ·M·x`.
    pub fn quadratic_form(&self, x: &[S::Elem]) -> S::Elem {
        let mx = self.apply(x);
        self.semiring.dot(x.iter().zip(&mx))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_lower_triangular(&self) -> bool {
        let z = self.semiring.zero();
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| *self.get(i, j) == z))
    }

    pub fn is_upper_triangular(&self) -> bool {
        let z = self.semiring.zero();
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| *self.get(i, j) == z))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_lower_triangular() && self.is_upper_triangular()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(&self.semiring, self.rows)
    }

    /// Rows and columns `range` of `self`.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(&self.semiring, rows.len(), cols.len(), |i, j| {
            self.get(r0 + i, c0 + j).clone()
        })
    }

    /// The top-left `k×k` block, `1 ≤ k ≤ n`.
    pub fn leading_principal_submatrix(&self, k: usize) -> Result<Self> {
        let n = self.require_square()?;
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        Ok(self.submatrix(0..k, 0..k))
    }

    /// Split a square matrix of size at least 2 into `[[a, rᵀ], [b, C]]`.
    pub fn block_view(&self) -> Result<BlockView<S>> {
        let n = self.require_square()?;
        if n < 2 {
            return Err(Error::ShapeMismatch("block view needs n >= 2".into()));
        }
        Ok(BlockView {
            a: self.get(0, 0).clone(),
            b: (1..n).map(|i| self.get(i, 0).clone()).collect(),
            first_row: self.row(0)[1..].to_vec(),
            c: self.submatrix(1..n, 1..n),
        })
    }

    /// The unique `X` with `MX = XM = I`.
    ///
    /// Over semirings with `V(S) = {0}` invertible matrices are exactly the
    /// monomial matrices with unit entries. Otherwise each column of `X` is
    /// found by exhaustive search over `Sⁿ`, and both products are checked.
    pub fn invert(&self) -> Result<Self> {
        let n = self.require_square()?;
        let s = &self.semiring;
        if s.is_antinegative() {
            return self.invert_monomial(n);
        }
        let elems = s.elements().ok_or(Error::NotEnumerable)?;
        guarded_count(elems.len(), n)?;

        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let target: Vec<S::Elem> = (0..n)
                .map(|i| if i == j { s.one() } else { s.zero() })
                .collect();
            let x = Tuples::new(elems, n)
                .find(|x| self.apply(x) == target)
                .ok_or(Error::NotInvertible { column: j })?;
            columns.push(x);
        }
        let inv = Self::from_fn(s, n, n, |i, j| columns[j][i].clone());
        let left = inv.mul(self)?;
        if let Some(j) = (0..n)
            .find(|&j| (0..n).any(|i| *left.get(i, j) != if i == j { s.one() } else { s.zero() }))
        {
            return Err(Error::NotInvertible { column: j });
        }
        Ok(inv)
    }

    fn invert_monomial(&self, n: usize) -> Result<Self> {
        let s = &self.semiring;
        let zero = s.zero();
        let mut inv = Self::zero(s, n, n);
        let mut row_hits = vec![0usize; n];
        for j in 0..n {
            let nonzero: Vec<usize> = (0..n).filter(|&i| *self.get(i, j) != zero).collect();
            let [i] = nonzero[..] else {
                return Err(Error::NotInvertible { column: j });
            };
            let unit_inv = s
                .inverse(self.get(i, j))
                .ok_or(Error::NotInvertible { column: j })?;
            row_hits[i] += 1;
            inv.set(j, i, unit_inv);
        }
        // n columns with one entry each: a repeated row leaves another row empty
        if let Some(i) = row_hits.iter().position(|&h| h != 1) {
            return Err(Error::NotInvertible { column: i });
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> Result<bool> {
        match self.invert() {
            Ok(_) => Ok(true),
            Err(Error::NotInvertible { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Whether every leading principal submatrix is invertible.
    pub fn strong_invertibility(&self) -> Result<StrongInvertibility> {
        let n = self.require_square()?;
        for k in 1..=n {
            if !self.leading_principal_submatrix(k)?.is_invertible()? {
                return Ok(StrongInvertibility::FailsAt(k));
            }
        }
        Ok(StrongInvertibility::Yes)
    }

    pub fn is_strongly_invertible(&self) -> Result<bool> {
        Ok(self.strong_invertibility()?.holds())
    }
}

impl<S: Semiring> Clone for ElemVec<S> {
    fn clone(&self) -> Self {
        ElemVec {
            semiring: Arc::clone(&self.semiring),
            entries: self.entries.clone(),
        }
    }
}

impl<S: Semiring> PartialEq for ElemVec<S> {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries && same(&self.semiring, &other.semiring)
    }
}

impl<S: Semiring> Eq for ElemVec<S> {}

impl<S: Semiring> fmt::Debug for ElemVec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.entries.iter().map(|e| self.semiring.name(e)).collect();
        write!(f, "({})", names.join(", "))
    }
}

impl<S: Semiring> ElemVec<S> {
    pub fn new(s: &Arc<S>, entries: Vec<S::Elem>) -> Self {
        ElemVec {
            semiring: Arc::clone(s),
            entries,
        }
    }

    pub fn from_names(s: &Arc<S>, names: &[&str]) -> Result<Self> {
        let entries = names
            .iter()
            .map(|n| s.parse_element(n))
            .collect::<Result<_>>()?;
        Ok(Self::new(s, entries))
    }

    pub fn semiring(&self) -> &Arc<S> {
        &self.semiring
    }

    pub fn entries(&self) -> &[S::Elem] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S::Elem> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| self.semiring.name(e)).collect()
    }
}
