use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Semiring;
use crate::error::{Error, Result};

/// The nonnegative integers `ℕ` with ordinary addition and multiplication.
///
/// Not enumerable: `U(ℕ) = {1}`, `V(ℕ) = {0}` and square membership is an
/// exact integer square root test.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Naturals;

impl Semiring for Naturals {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }

    fn one(&self) -> BigUint {
        BigUint::one()
    }

    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }

    fn inverse(&self, a: &BigUint) -> Option<BigUint> {
        a.is_one().then(BigUint::one)
    }

    fn negate(&self, a: &BigUint) -> Option<BigUint> {
        a.is_zero().then(BigUint::zero)
    }

    fn square_roots(&self, a: &BigUint) -> Vec<BigUint> {
        let r = a.sqrt();
        if &(&r * &r) == a {
            vec![r]
        } else {
            Vec::new()
        }
    }

    fn is_antinegative(&self) -> bool {
        true
    }

    fn elements(&self) -> Option<&[BigUint]> {
        None
    }

    fn sample(&self, bound: usize) -> Vec<BigUint> {
        (0..=bound as u64).map(BigUint::from).collect()
    }

    fn name(&self, a: &BigUint) -> String {
        a.to_string()
    }

    fn parse_element(&self, text: &str) -> Result<BigUint> {
        text.trim()
            .parse()
            .map_err(|_| Error::UnknownElement(text.to_string()))
    }

    fn label(&self) -> &str {
        "nat"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn oracles() {
        let s = Naturals;
        assert_eq!(s.square_roots(&n(49)), vec![n(7)]);
        assert!(s.square_roots(&n(2)).is_empty());
        assert_eq!(s.square_roots(&n(0)), vec![n(0)]);
        assert_eq!(s.inverse(&n(1)), Some(n(1)));
        assert_eq!(s.inverse(&n(2)), None);
        assert_eq!(s.negate(&n(0)), Some(n(0)));
        assert_eq!(s.negate(&n(3)), None);
        assert!(!s.is_finite());
    }

    #[test]
    fn big_squares_are_exact() {
        let s = Naturals;
        let big: BigUint = "123456789012345678901234567890".parse().unwrap();
        let sq = &big * &big;
        assert_eq!(s.square_roots(&sq), vec![big]);
        assert!(s.square_roots(&(sq + 1u32)).is_empty());
    }
}
