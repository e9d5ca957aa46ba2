//! Morphisms on either side of the adjunctions.
//!
//! Algebraic maps (monoid and semiring homomorphisms) are checked on
//! samples when they are built. Monad maps and theory functors are plain
//! families of functions; their laws are checked by the harness.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Monoid, Semiring};
use crate::error::{Error, Result};
use crate::matcat::Matrix;
use crate::monadcore::{t1_mul, t1_unit, Monad};

type MapFn<A, B> = Arc<dyn Fn(&A) -> Result<B> + Send + Sync>;

fn pairs<A>(samples: &[A]) -> impl Iterator<Item = (&A, &A)> {
    samples.iter().flat_map(move |a| samples.iter().map(move |b| (a, b)))
}

/// A monoid homomorphism `M → E(T)`, where `E(T)` is `T(1)` under `μ ∘ T(π₂) ∘ st`.
pub struct MonoidMap<M: Monoid, T: Monad> {
    name: String,
    map: MapFn<M, T::Value>,
}

impl<M: Monoid, T: Monad> Clone for MonoidMap<M, T> {
    fn clone(&self) -> Self {
        MonoidMap { name: self.name.clone(), map: self.map.clone() }
    }
}

impl<M: Monoid, T: Monad> fmt::Debug for MonoidMap<M, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoidMap({}: {} -> E({}))", self.name, M::name(), T::name())
    }
}

impl<M: Monoid, T: Monad> MonoidMap<M, T> {
    /// Accepts `f` only if it preserves the unit and all products of `samples`.
    pub fn new(
        name: impl Into<String>,
        samples: &[M],
        f: impl Fn(&M) -> Result<T::Value> + Send + Sync + 'static,
    ) -> Result<Self> {
        let w = MonoidMap { name: name.into(), map: Arc::new(f) };
        let bad = |msg: String| Error::NotAMonoidMap(format!("{}: {msg}", w.name));
        let unit = w.apply(&M::unit())?;
        if unit != t1_unit::<T>() {
            return Err(bad(format!("unit goes to {unit}")));
        }
        for (a, b) in pairs(samples) {
            let lhs = w.apply(&a.op(b))?;
            let rhs = t1_mul::<T>(&w.apply(a)?, &w.apply(b)?)?;
            if lhs != rhs {
                return Err(bad(format!("f({a}·{b}) = {lhs} but f({a})·f({b}) = {rhs}")));
            }
        }
        Ok(w)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, m: &M) -> Result<T::Value> {
        (self.map)(m)
    }
}

/// A semiring homomorphism `S → R`.
pub struct SemiringMap<S, R> {
    name: String,
    map: MapFn<S, R>,
}

impl<S, R> Clone for SemiringMap<S, R> {
    fn clone(&self) -> Self {
        SemiringMap { name: self.name.clone(), map: self.map.clone() }
    }
}

impl<S: Semiring, R: Semiring> fmt::Debug for SemiringMap<S, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemiringMap({}: {} -> {})", self.name, S::name(), R::name())
    }
}

impl<S: Semiring, R: Semiring> SemiringMap<S, R> {
    /// Accepts `f` only if it preserves `0`, `1` and all sums and products of `samples`.
    pub fn new(
        name: impl Into<String>,
        samples: &[S],
        f: impl Fn(&S) -> Result<R> + Send + Sync + 'static,
    ) -> Result<Self> {
        let w = SemiringMap { name: name.into(), map: Arc::new(f) };
        let bad = |msg: String| Error::NotASemiringMap(format!("{}: {msg}", w.name));
        let zero = w.apply(&S::zero())?;
        if zero != R::zero() {
            return Err(bad(format!("zero goes to {zero}")));
        }
        let one = w.apply(&S::one())?;
        if one != R::one() {
            return Err(bad(format!("one goes to {one}")));
        }
        for (a, b) in pairs(samples) {
            let (fa, fb) = (w.apply(a)?, w.apply(b)?);
            let sum = w.apply(&(a.clone() + b.clone()))?;
            if sum != fa.clone() + fb.clone() {
                return Err(bad(format!("f({a}+{b}) = {sum} but f({a})+f({b}) = {}", fa + fb)));
            }
            let product = w.apply(&(a.clone() * b.clone()))?;
            if product != fa.clone() * fb.clone() {
                return Err(bad(format!("f({a}·{b}) = {product} but f({a})·f({b}) = {}", fa * fb)));
            }
        }
        Ok(w)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, s: &S) -> Result<R> {
        (self.map)(s)
    }

    /// `self ∘ g`.
    pub fn after<Q: Semiring>(&self, g: &SemiringMap<Q, S>) -> SemiringMap<Q, R> {
        let (f, g) = (self.clone(), g.clone());
        SemiringMap {
            name: format!("{} after {}", f.name, g.name),
            map: Arc::new(move |q| f.apply(&g.apply(q)?)),
        }
    }
}

/// The unique semiring map `ℕ → S`.
pub fn canonical<S: Semiring>() -> Result<SemiringMap<crate::algebra::Nat, S>> {
    SemiringMap::new("canonical", &crate::algebra::Nat::pool(), |n: &crate::algebra::Nat| {
        let n = u64::try_from(&n.0)
            .map_err(|_| Error::NotASemiringMap(format!("{n} is too large to fold")))?;
        Ok(S::from_nat(n))
    })
}

/// A family of components `T₁(X) → T₂(X)`, one function for every `X`.
pub struct MonadMap<T1: Monad, T2: Monad> {
    name: String,
    map: MapFn<T1::Value, T2::Value>,
}

impl<T1: Monad, T2: Monad> Clone for MonadMap<T1, T2> {
    fn clone(&self) -> Self {
        MonadMap { name: self.name.clone(), map: self.map.clone() }
    }
}

impl<T1: Monad, T2: Monad> fmt::Debug for MonadMap<T1, T2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonadMap({}: {} -> {})", self.name, T1::name(), T2::name())
    }
}

impl<T1: Monad, T2: Monad> MonadMap<T1, T2> {
    pub fn new(name: impl Into<String>, f: impl Fn(&T1::Value) -> Result<T2::Value> + Send + Sync + 'static) -> Self {
        MonadMap { name: name.into(), map: Arc::new(f) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, u: &T1::Value) -> Result<T2::Value> {
        (self.map)(u)
    }
}

/// A morphism-level functor `Mat(S) → Mat(R)`, identity on objects.
pub struct TheoryFunctor<S, R> {
    name: String,
    map: MapFn<Matrix<S>, Matrix<R>>,
}

impl<S, R> Clone for TheoryFunctor<S, R> {
    fn clone(&self) -> Self {
        TheoryFunctor { name: self.name.clone(), map: self.map.clone() }
    }
}

impl<S: Semiring, R: Semiring> fmt::Debug for TheoryFunctor<S, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TheoryFunctor({}: Mat({}) -> Mat({}))", self.name, S::name(), R::name())
    }
}

impl<S: Semiring, R: Semiring> TheoryFunctor<S, R> {
    pub fn new(name: impl Into<String>, f: impl Fn(&Matrix<S>) -> Result<Matrix<R>> + Send + Sync + 'static) -> Self {
        TheoryFunctor { name: name.into(), map: Arc::new(f) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, h: &Matrix<S>) -> Result<Matrix<R>> {
        (self.map)(h)
    }
}
