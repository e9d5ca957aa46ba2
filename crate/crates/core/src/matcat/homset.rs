//! The semiring `H(Mat(S)) = Mat(S)(1, 1)`.
//!
//! Addition is the homset sum `∇ ∘ (f ⊕ g) ∘ Δ`, multiplication is
//! composition and the involution, when present, is the dagger.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use rand::RngCore;

use super::matrix::Matrix;
use crate::algebra::{Involutive, Semiring, SemiringDescriptor};

/// An endomorphism `1 → 1` of `Mat(S)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HomOne<S>(Matrix<S>);

impl<S: Semiring> HomOne<S> {
    /// The `1 × 1` matrix `[s]`.
    pub fn of(s: S) -> Self {
        HomOne(Matrix::new(1, 1, vec![s]).expect("one entry"))
    }

    /// Wraps a `1 × 1` matrix; `None` for any other shape.
    pub fn from_matrix(m: Matrix<S>) -> Option<Self> {
        (m.rows() == 1 && m.cols() == 1).then_some(HomOne(m))
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn scalar(&self) -> &S {
        self.0.get(0, 0)
    }
}

impl<S: Semiring> Add for HomOne<S> {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        HomOne(Matrix::homset_add(&self.0, &other.0).expect("1x1 matrices"))
    }
}

impl<S: Semiring> Mul for HomOne<S> {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        HomOne(self.0.compose(&other.0).expect("1x1 matrices"))
    }
}

impl<S: Semiring> Zero for HomOne<S> {
    /// The zero map `1 → 0 → 1`.
    fn zero() -> Self {
        HomOne(Matrix::zero(1, 0).compose(&Matrix::zero(0, 1)).expect("through 0"))
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

impl<S: Semiring> One for HomOne<S> {
    fn one() -> Self {
        HomOne(Matrix::identity(1))
    }
}

impl<S: fmt::Display> fmt::Display for HomOne<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<S: Semiring> Semiring for HomOne<S> {
    fn name() -> String {
        format!("H(Mat({}))", S::name())
    }

    fn pool() -> Vec<Self> {
        S::pool().into_iter().map(HomOne::of).collect()
    }

    fn sample(rng: &mut dyn RngCore) -> Self {
        HomOne::of(S::sample(rng))
    }
}

impl<S: Involutive> Involutive for HomOne<S> {
    fn star(&self) -> Self {
        HomOne(self.0.dagger())
    }
}

/// `H(Mat(S))` as a semiring descriptor.
pub fn homset_semiring<S: Semiring>() -> SemiringDescriptor<HomOne<S>> {
    SemiringDescriptor::of()
}

/// `H(Mat(S))` with the dagger as involution.
pub fn homset_semiring_involutive<S: Involutive>() -> SemiringDescriptor<HomOne<S>> {
    SemiringDescriptor::of_involutive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GaussianRational, Nat};

    #[test]
    fn examples() {
        let d = homset_semiring::<Nat>();
        let h = |n| HomOne::of(Nat::new(n));
        assert_eq!(d.add(&h(2), &h(3)), h(5));
        assert_eq!(d.mul(&h(2), &h(3)), h(6));
        assert_eq!(d.zero, h(0));
        assert_eq!(d.one, h(1));
    }

    #[test]
    fn star_is_conjugation() {
        let z = GaussianRational::int(2, 3);
        assert_eq!(HomOne::of(z.clone()).star(), HomOne::of(z.star()));
    }
}
