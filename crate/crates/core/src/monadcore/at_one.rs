//! Evaluation at the one-point set: the monoid, and for additive monads the
//! semiring, carried by `T(1)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use rand::RngCore;

use super::carrier::FiniteCarrier;
use super::derived::{t1_mul, t1_unit, tx_add, tx_zero};
use super::monad::{AdditiveMonad, CommutativeMonad, InvolutiveMonad, Monad};
use crate::algebra::{Involutive, Monoid, MonoidDescriptor, Semiring, SemiringDescriptor};

/// A value of `T(1)`, with operations given by the generic composites:
/// multiplication `μ ∘ T(π₂) ∘ st`, unit `η(★)`, addition `T(∇) ∘ bc⁻¹` and
/// zero the zero map `1 → T(1)`.
pub struct AtOne<T: Monad>(pub T::Value);

impl<T: Monad> AtOne<T> {
    pub fn new(value: T::Value) -> Self {
        AtOne(value)
    }

    pub fn value(&self) -> &T::Value {
        &self.0
    }
}

impl<T: Monad> Clone for AtOne<T> {
    fn clone(&self) -> Self {
        AtOne(self.0.clone())
    }
}

impl<T: Monad> PartialEq for AtOne<T> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<T: Monad> Eq for AtOne<T> {}

impl<T: Monad> PartialOrd for AtOne<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Monad> Ord for AtOne<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl<T: Monad> fmt::Debug for AtOne<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AtOne({:?})", self.0)
    }
}

impl<T: Monad> fmt::Display for AtOne<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<T: Monad> Mul for AtOne<T> {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        AtOne(t1_mul::<T>(&self.0, &other.0).expect("T(1) values multiply"))
    }
}

impl<T: Monad> One for AtOne<T> {
    fn one() -> Self {
        AtOne(t1_unit::<T>())
    }
}

impl<T: AdditiveMonad> Add for AtOne<T> {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        AtOne(tx_add::<T>(&self.0, &other.0).expect("T(1) values add"))
    }
}

impl<T: AdditiveMonad> Zero for AtOne<T> {
    fn zero() -> Self {
        AtOne(tx_zero::<T>().expect("additive monads have a zero"))
    }

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

fn one_point() -> FiniteCarrier {
    FiniteCarrier::one()
}

impl<T: AdditiveMonad + CommutativeMonad> Semiring for AtOne<T> {
    fn name() -> String {
        format!("E({})", T::name())
    }

    fn pool() -> Vec<Self> {
        T::one_pool().into_iter().map(AtOne).collect()
    }

    fn sample(rng: &mut dyn RngCore) -> Self {
        AtOne(T::sample_value(rng, &one_point(), 1))
    }
}

impl<T: AdditiveMonad + CommutativeMonad + InvolutiveMonad> Involutive for AtOne<T> {
    fn star(&self) -> Self {
        AtOne(T::involution(&self.0))
    }
}

impl<T: Monad> Monoid for AtOne<T> {
    fn name() -> String {
        format!("E({})", T::name())
    }

    fn unit() -> Self {
        <Self as One>::one()
    }

    fn op(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn pool() -> Vec<Self> {
        T::one_pool().into_iter().map(AtOne).collect()
    }

    fn sample(rng: &mut dyn RngCore) -> Self {
        AtOne(T::sample_value(rng, &one_point(), 1))
    }
}

/// `E(T)` as a monoid descriptor over `T(1)`-values.
pub fn eval_at_one_monoid<T: Monad>() -> MonoidDescriptor<AtOne<T>> {
    MonoidDescriptor::of()
}

/// `E(T)` as a semiring descriptor over `T(1)`-values; the star is `ζ₁`
/// when the monad is involutive (see [`eval_at_one_involutive`]).
pub fn eval_at_one<T: AdditiveMonad + CommutativeMonad>() -> SemiringDescriptor<AtOne<T>> {
    SemiringDescriptor::of()
}

pub fn eval_at_one_involutive<T: AdditiveMonad + CommutativeMonad + InvolutiveMonad>(
) -> SemiringDescriptor<AtOne<T>> {
    SemiringDescriptor::of_involutive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_semiring_laws, GaussianRational, Nat, Word};
    use crate::monadcore::{ActValue, ActionMonad, Elem, Multiset, MultisetMonad};

    type EN = AtOne<MultisetMonad<Nat>>;

    fn e(n: u64) -> EN {
        AtOne(Multiset::singleton(Elem::Star, Nat::new(n)))
    }

    #[test]
    fn operations_of_e_nat() {
        let d = eval_at_one::<MultisetMonad<Nat>>();
        assert_eq!(d.mul(&e(2), &e(3)), e(6));
        assert_eq!(d.add(&e(2), &e(3)), e(5));
        assert!(d.zero.0.is_empty());
        assert_eq!(d.one, e(1));
    }

    #[test]
    fn e_of_words_concatenates() {
        let w = |s: &str| AtOne::<ActionMonad<Word>>(ActValue::new(Word::new(s).unwrap(), Elem::Star));
        assert_eq!(w("ab").op(&w("ba")), w("abba"));
        assert_eq!(<AtOne<ActionMonad<Word>> as Monoid>::unit(), w(""));
    }

    #[test]
    fn e_of_gaussian_is_an_involutive_semiring() {
        let d = eval_at_one_involutive::<MultisetMonad<GaussianRational>>();
        let r = check_semiring_laws(&d, &<AtOne<MultisetMonad<GaussianRational>> as Semiring>::pool()).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
