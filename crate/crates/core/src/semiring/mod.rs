//! Commutative semirings.
//!
//! A semiring here is anything implementing [`Semiring`]: finite ones are
//! [`SemiringTable`]s (validated Cayley tables with precomputed units,
//! negations and square roots), and the one supported infinite semiring is
//! [`Naturals`], backed by arbitrary-precision integers.
//!
//! Builders are addressable by short URIs (`zn:6`, `bool`, `product:zn:2,bool`,
//! `z2x3`, `chain:2`, `nat`), see [`parse_uri`].

mod builders;
mod naturals;
mod table;

use std::fmt;
use std::hash::Hash;

pub use builders::{
    make_boolean, make_chain_lattice, make_naturals, make_product, make_z2x_mod_x3, make_zn,
    parse_uri, AnySemiring,
};
pub use naturals::Naturals;
pub use table::{validate_table, DerivedSets, RawTables, SemiringTable};

use crate::error::Result;

/// An element of a finite semiring: an index into its carrier `0..q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub u32);

impl Element {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A commutative semiring with the element-level operations the matrix
/// algorithms consume.
///
/// Subtraction and division do not exist in general; they are replaced by
/// the partial maps [`Semiring::negate`] (defined on `V(S)`) and
/// [`Semiring::inverse`] (defined on `U(S)`).
pub trait Semiring: fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The multiplicative inverse, when `a ∈ U(S)`.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// The additive inverse `-a`, when `a ∈ V(S)`.
    fn negate(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Every `b` with `b·b = a`, in ascending canonical order.
    fn square_roots(&self, a: &Self::Elem) -> Vec<Self::Elem>;

    /// True when `V(S) = {0}`.
    fn is_antinegative(&self) -> bool;

    /// The whole carrier in canonical order, or `None` for infinite semirings.
    fn elements(&self) -> Option<&[Self::Elem]>;

    /// The first `bound + 1` elements in canonical order (all of them when
    /// the semiring is finite and smaller than that).
    fn sample(&self, bound: usize) -> Vec<Self::Elem>;

    /// Display name of an element.
    fn name(&self, a: &Self::Elem) -> String;

    /// Resolve a display name (or, failing that, a canonical index).
    fn parse_element(&self, text: &str) -> Result<Self::Elem>;

    /// The builder URI or file label this semiring was loaded from.
    fn label(&self) -> &str;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inverse(a).is_some()
    }

    fn is_negatable(&self, a: &Self::Elem) -> bool {
        self.negate(a).is_some()
    }

    fn is_square(&self, a: &Self::Elem) -> bool {
        !self.square_roots(a).is_empty()
    }

    fn is_finite(&self) -> bool {
        self.elements().is_some()
    }

    /// Number of elements, when finite.
    fn order(&self) -> Option<usize> {
        self.elements().map(<[_]>::len)
    }

    /// The square root used whenever an algorithm needs exactly one:
    /// invertible roots first, then smallest canonical index.
    fn preferred_root(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let roots = self.square_roots(a);
        roots
            .iter()
            .find(|r| self.is_unit(r))
            .or_else(|| roots.first())
            .cloned()
    }

    /// `Σ aᵢ·bᵢ`.
    fn dot<'a, I>(&self, pairs: I) -> Self::Elem
    where
        I: IntoIterator<Item = (&'a Self::Elem, &'a Self::Elem)>,
        Self::Elem: 'a,
    {
        pairs
            .into_iter()
            .fold(self.zero(), |acc, (a, b)| self.add(&acc, &self.mul(a, b)))
    }
}
