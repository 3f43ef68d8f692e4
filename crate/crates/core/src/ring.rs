//! The entry ring of series grids.

use crate::polynomial::{Accumulator, Polynomial};
use crate::rational::Rational;

/// Commutative ring operations needed by the convolution kernels.
///
/// `dot` computes `Σ a_i · b_i` and is the one operation the kernels call
/// in their inner loop; implementations override it when batching the sum
/// is cheaper than repeated `add_ref`/`mul_ref`.
pub trait SeriesRing: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(c: &Rational) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    fn dot<'a>(pairs: impl Iterator<Item = (&'a Self, &'a Self)>) -> Self
    where
        Self: 'a,
    {
        pairs.fold(Self::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
    }
}

impl SeriesRing for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn from_rational(c: &Rational) -> Self {
        c.clone()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl SeriesRing for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn from_rational(c: &Rational) -> Self {
        Polynomial::constant(c.clone())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        Polynomial::scale(self, c)
    }

    fn dot<'a>(pairs: impl Iterator<Item = (&'a Self, &'a Self)>) -> Self {
        let mut acc = Accumulator::new();
        for (a, b) in pairs {
            acc.add_product(a, b);
        }
        acc.finish()
    }
}
