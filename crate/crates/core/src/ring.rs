//! Coefficient rings.
//!
//! Series, characters and power series are generic over [`Ring`]. The trait is deliberately
//! small: the engines only need the ring operations, integer embedding, scaling by rationals
//! and inversion of units.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An associative unital ring containing the rationals, not necessarily commutative.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    /// Inverse of a unit; `None` if `self` is not known to be invertible.
    fn try_inverse(&self) -> Option<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_rational(c: &Rational) -> Self {
        Self::one().scale(c)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }

    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Signed Catalan number helpers live here because several modules share them.
pub fn catalan(n: usize) -> BigInt {
    // C_n = binom(2n, n) / (n + 1)
    binomial(2 * n, n) / BigInt::from(n + 1)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_prefix() {
        let got: Vec<BigInt> = (0..8).map(catalan).collect();
        let want: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(rat(2, 3).try_inverse(), Some(rat(3, 2)));
        assert_eq!(<Rational as Ring>::zero().try_inverse(), None);
    }
}
