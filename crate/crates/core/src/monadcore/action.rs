//! The action monad `A(M) = M × (−)` of a monoid.

use std::fmt;
use std::marker::PhantomData;

use rand::seq::SliceRandom;
use rand::RngCore;

use super::carrier::{CarrierMap, FiniteCarrier};
use super::elem::Elem;
use super::monad::{CommutativeMonad, Monad};
use crate::algebra::{CommutativeMonoid, Monoid};
use crate::error::{Error, Result};

/// A value `(m, x)` of `A(M)(X)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ActValue<M> {
    pub scalar: M,
    pub elem: Elem,
}

impl<M> ActValue<M> {
    pub fn new(scalar: M, elem: Elem) -> Self {
        ActValue { scalar, elem }
    }
}

impl<M: fmt::Display> fmt::Display for ActValue<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.scalar, self.elem)
    }
}

/// `η(x) = (1, x)`.
pub fn action_unit<M: Monoid>(x: Elem) -> ActValue<M> {
    ActValue::new(M::unit(), x)
}

/// `μ(s, (t, x)) = (s·t, x)`.
pub fn action_mult<M: Monoid>(outer: &ActValue<M>) -> Result<ActValue<M>> {
    let inner = outer.elem.downcast::<ActValue<M>>().ok_or_else(|| {
        Error::MonoidMismatch(format!("{} is not an action value over {}", outer.elem, M::name()))
    })?;
    Ok(ActValue::new(outer.scalar.op(&inner.scalar), inner.elem.clone()))
}

/// The action monad of the monoid `M`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ActionMonad<M>(PhantomData<M>);

impl<M: Monoid> Monad for ActionMonad<M> {
    type Value = ActValue<M>;

    fn name() -> String {
        format!("A({})", M::name())
    }

    fn unit(x: Elem) -> ActValue<M> {
        action_unit(x)
    }

    fn fmap(f: &CarrierMap, u: &ActValue<M>) -> Result<ActValue<M>> {
        Ok(ActValue::new(u.scalar.clone(), f.apply(&u.elem)?))
    }

    fn mult(uu: &ActValue<M>) -> Result<ActValue<M>> {
        action_mult(uu)
    }

    fn support(u: &ActValue<M>) -> FiniteCarrier {
        FiniteCarrier::new([u.elem.clone()])
    }

    fn values_over_empty() -> Vec<ActValue<M>> {
        Vec::new()
    }

    fn sample_value(rng: &mut dyn RngCore, carrier: &FiniteCarrier, _max_support: usize) -> ActValue<M> {
        let x = carrier.elems().choose(rng).expect("action values need a nonempty carrier");
        ActValue::new(M::sample(rng), x.clone())
    }

    fn one_pool() -> Vec<ActValue<M>> {
        M::pool().into_iter().map(|m| ActValue::new(m, Elem::Star)).collect()
    }

    fn extract(e: &Elem) -> Result<ActValue<M>> {
        e.downcast::<ActValue<M>>()
            .cloned()
            .ok_or_else(|| Error::MonoidMismatch(format!("{e} is not an action value over {}", M::name())))
    }
}

impl<M: CommutativeMonoid> CommutativeMonad for ActionMonad<M> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Multiplicative, Nat, Word};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn unit_and_mult_over_words() {
        let x = Elem::sym("x");
        assert_eq!(action_unit::<Word>(x.clone()), ActValue::new(Word::unit(), x.clone()));
        let nested = ActValue::new(w("a"), Elem::val(ActValue::new(w("b"), x.clone())));
        assert_eq!(action_mult(&nested).unwrap(), ActValue::new(w("ab"), x.clone()));
        let unit_outer = ActValue::new(Word::unit(), Elem::val(ActValue::new(w("cd"), x.clone())));
        assert_eq!(action_mult(&unit_outer).unwrap(), ActValue::new(w("cd"), x));
    }

    #[test]
    fn mult_rejects_other_monoids() {
        let foreign = ActValue::new(Multiplicative(Nat::new(2)), Elem::Star);
        let outer = ActValue::new(w("a"), Elem::val(foreign));
        assert!(matches!(action_mult(&outer), Err(Error::MonoidMismatch(_))));
    }

    #[test]
    fn action_monad_has_no_values_over_the_empty_set() {
        assert!(ActionMonad::<Word>::values_over_empty().is_empty());
    }
}
