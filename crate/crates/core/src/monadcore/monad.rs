//! Monads on finite sets.
//!
//! A monad is a static type whose values carry their own elements, so one
//! function serves every component `T(X)`. Maps between carriers are
//! explicit tables, and nested values `T(T(X))` embed inner values as
//! [`Elem::Val`] keys.

use std::fmt::{Debug, Display};

use rand::RngCore;

use super::carrier::{CarrierMap, FiniteCarrier};
use super::elem::Elem;
use crate::error::{Error, Result};

/// A monad `(T, η, μ)` on finite sets.
pub trait Monad: Sized + Send + Sync + 'static {
    type Value: Clone + Ord + Debug + Display + Send + Sync + 'static;

    fn name() -> String;

    /// `η_X(x)`.
    fn unit(x: Elem) -> Self::Value;

    /// `T(f)(u)`; fails if `u` mentions an element outside `f`'s domain.
    fn fmap(f: &CarrierMap, u: &Self::Value) -> Result<Self::Value>;

    /// `μ_X`; every element of `uu` must be an embedded `T`-value.
    fn mult(uu: &Self::Value) -> Result<Self::Value>;

    /// The elements of `X` that `u` actually mentions.
    fn support(u: &Self::Value) -> FiniteCarrier;

    /// Every value of `T(0)`.
    fn values_over_empty() -> Vec<Self::Value>;

    /// A random value over a nonempty `carrier` mentioning at most
    /// `max_support` elements.
    fn sample_value(rng: &mut dyn RngCore, carrier: &FiniteCarrier, max_support: usize) -> Self::Value;

    /// Curated values of `T(1)`.
    fn one_pool() -> Vec<Self::Value>;

    fn embed(u: Self::Value) -> Elem {
        Elem::val(u)
    }

    fn extract(e: &Elem) -> Result<Self::Value> {
        e.downcast::<Self::Value>()
            .cloned()
            .ok_or_else(|| Error::MonadMismatch(format!("{e} is not a value of {}", Self::name())))
    }
}

/// A monad with `T(0) ≅ 1` whose map `bc: T(X+Y) → T(X) × T(Y)` is invertible.
///
/// The forward map is computed generically (see
/// [`bc`](crate::monadcore::bc)); instances supply the inverse.
pub trait AdditiveMonad: Monad {
    /// `bc⁻¹`: merges a value over `X` and one over `Y` into one over `X + Y`.
    fn bc_inv(u: &Self::Value, v: &Self::Value) -> Self::Value;
}

/// Marker for monads whose two double-strength composites agree.
pub trait CommutativeMonad: Monad {}

/// A monad with an involutive monad map `ζ: T → T`.
pub trait InvolutiveMonad: Monad {
    fn involution(u: &Self::Value) -> Self::Value;
}
