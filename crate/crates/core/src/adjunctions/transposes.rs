//! The bijections of the monoid, semiring and theory adjunctions.
//!
//! `*_up` turns an algebraic map into a map of monads or theories, and
//! `*_down` evaluates at the one-point set (or at `1 × 1` matrices).

use crate::algebra::{Monoid, Semiring};
use crate::error::{Error, Result};
use crate::matcat::{HomOne, Matrix};
use crate::monadcore::derived::project_second;
use crate::monadcore::{
    map_with, scalar_action, strength, tx_add, tx_zero, ActValue, ActionMonad, AdditiveMonad, AtOne,
    CommutativeMonad, Elem, Monad, Multiset, MultisetMonad,
};

use super::witness::{MonadMap, MonoidMap, SemiringMap, TheoryFunctor};

/// `f̄(m, x) = T(λ)(st(f(m), x))`.
pub fn transpose_mon_up<M: Monoid, T: Monad>(f: &MonoidMap<M, T>) -> MonadMap<ActionMonad<M>, T> {
    let f = f.clone();
    MonadMap::new(format!("{} transposed", f.name()), move |u: &ActValue<M>| {
        map_with::<T>(&strength::<T>(&f.apply(&u.scalar)?, &u.elem)?, project_second)
    })
}

/// `σ̄(m) = σ(m, ★)`, checked to be a monoid map on the pool of `M`.
pub fn transpose_mon_down<M: Monoid, T: Monad>(sigma: &MonadMap<ActionMonad<M>, T>) -> Result<MonoidMap<M, T>> {
    let sigma = sigma.clone();
    let name = format!("{} at one", sigma.name());
    MonoidMap::new(name, &M::pool(), move |m: &M| sigma.apply(&ActValue::new(m.clone(), Elem::Star)))
}

/// `f̄(Σ sᵢxᵢ) = Σ f(sᵢ) ⋆ η(xᵢ)`, summed with `T(∇) ∘ bc⁻¹` from the zero map.
pub fn transpose_srng_up<S, T>(f: &SemiringMap<S, AtOne<T>>) -> MonadMap<MultisetMonad<S>, T>
where
    S: Semiring,
    T: AdditiveMonad + CommutativeMonad,
{
    let f = f.clone();
    MonadMap::new(format!("{} transposed", f.name()), move |phi: &Multiset<S>| {
        phi.iter().try_fold(tx_zero::<T>()?, |acc, (x, s)| {
            let term = scalar_action::<T>(&f.apply(s)?.0, &T::unit(x.clone()))?;
            tx_add::<T>(&acc, &term)
        })
    })
}

/// `σ̄(s) = σ({★: s})`, checked to be a semiring map on the pool of `S`.
pub fn transpose_srng_down<S, T>(sigma: &MonadMap<MultisetMonad<S>, T>) -> Result<SemiringMap<S, AtOne<T>>>
where
    S: Semiring,
    T: AdditiveMonad + CommutativeMonad,
{
    let sigma = sigma.clone();
    let name = format!("{} at one", sigma.name());
    SemiringMap::new(name, &S::pool(), move |s: &S| Ok(AtOne(sigma.apply(&Multiset::singleton(Elem::Star, s.clone()))?)))
}

/// `f̄(h)` is the `n`-cotuple of `m`-tuples of the `1 × 1` matrices `f(h(i, j))`.
pub fn transpose_math_up<S: Semiring, R: Semiring>(f: &SemiringMap<S, HomOne<R>>) -> TheoryFunctor<S, R> {
    let f = f.clone();
    TheoryFunctor::new(format!("{} transposed", f.name()), move |h: &Matrix<S>| {
        let rows = (0..h.rows())
            .map(|i| {
                let parts = (0..h.cols())
                    .map(|j| Ok(f.apply(h.get(i, j))?.matrix().clone()))
                    .collect::<Result<Vec<_>>>()?;
                Matrix::tuple_all(&parts, 1)
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::cotuple_all(&rows, h.cols())
    })
}

/// `F̄(s) = F([s])`, checked to be a semiring map on the pool of `S`.
pub fn transpose_math_down<S: Semiring, R: Semiring>(functor: &TheoryFunctor<S, R>) -> Result<SemiringMap<S, HomOne<R>>> {
    let functor = functor.clone();
    let name = format!("{} on endomaps of one", functor.name());
    SemiringMap::new(name, &S::pool(), move |s: &S| {
        let image = functor.apply(HomOne::of(s.clone()).matrix())?;
        HomOne::from_matrix(image.clone())
            .ok_or_else(|| Error::NotASemiringMap(format!("[{s}] goes to the {}x{} matrix {image}", image.rows(), image.cols())))
    })
}
