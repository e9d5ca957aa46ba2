//! The free-theory monad `T_L` of the matrix theory `L = Mat(S)`.
//!
//! A term `κ_i(g, v)` pairs a morphism `g: 1 → i` with an `i`-tuple of
//! elements. Terms related by `κ_m(f ∘ g, v) ∼ κ_i(g, v ∘ f)` are never
//! identified by closure; they are compared through [`FreeTerm::normalize`],
//! which lands in `M_S`.

use std::fmt;
use std::marker::PhantomData;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::algebra::{Involutive, Semiring};
use crate::error::{Error, Result};
use crate::kleisli::{xi_scalars, KleisliMap};
use crate::matcat::{Aleph0Map, Matrix};
use crate::monadcore::{
    ms_fmap, AdditiveMonad, CarrierMap, Elem, FiniteCarrier, InvolutiveMonad, Monad, Multiset, MultisetMonad,
};

/// A representative `κ_i(g, v)` with `g: 1 → i` and `v ∈ X^i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FreeTerm<S> {
    g: Matrix<S>,
    v: Vec<Elem>,
}

fn malformed(what: impl Into<String>) -> Error {
    Error::MalformedTerm(what.into())
}

impl<S: Semiring> FreeTerm<S> {
    pub fn new(g: Matrix<S>, v: Vec<Elem>) -> Result<Self> {
        if g.rows() != 1 {
            return Err(malformed(format!("coefficients {g} must form a single row")));
        }
        if g.cols() != v.len() {
            return Err(malformed(format!("{} coefficients for {} elements", g.cols(), v.len())));
        }
        Ok(FreeTerm { g, v })
    }

    /// Builds `κ_i` from a row of coefficients.
    pub fn from_row(coefficients: Vec<S>, v: Vec<Elem>) -> Result<Self> {
        let cols = coefficients.len();
        Self::new(Matrix::new(1, cols, coefficients)?, v)
    }

    pub fn arity(&self) -> usize {
        self.v.len()
    }

    pub fn coefficients(&self) -> &Matrix<S> {
        &self.g
    }

    pub fn elems(&self) -> &[Elem] {
        &self.v
    }

    /// A random term of arity at most `max_arity`, drawing elements (with
    /// repetition) from a nonempty `carrier`.
    pub fn random(rng: &mut dyn RngCore, carrier: &FiniteCarrier, max_arity: usize) -> Self {
        let i = rng.gen_range(0..=max_arity);
        let g = Matrix::random(rng, 1, i);
        let v = (0..i)
            .map(|_| carrier.elems().choose(rng).expect("nonempty carrier").clone())
            .collect();
        FreeTerm { g, v }
    }

    /// The normal form `(T(v) ∘ F(g))(★)`: `x ↦ Σ_{a : v(a) = x} g(0, a)`.
    pub fn normalize(&self) -> Result<Multiset<S>> {
        let row = xi_scalars(&self.g)?;
        let v = CarrierMap::from_table(self.v.iter().enumerate().map(|(a, x)| (Elem::Idx(a), x.clone())));
        ms_fmap(&v, row.component(0))
    }
}

impl<S: fmt::Display> fmt::Display for FreeTerm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.v.iter().map(ToString::to_string).collect();
        write!(f, "k_{}({}; {})", self.v.len(), self.g, v.join(", "))
    }
}

/// `[κ₁(id₁, x)]`.
pub fn tl_unit<S: Semiring>(x: Elem) -> FreeTerm<S> {
    FreeTerm { g: Matrix::identity(1), v: vec![x] }
}

/// `κ_i(g, (κ_{i₀}(g₀, v₀), …))  ↦  κ_{Σ i_a}((g₀ ⊕ ⋯ ⊕ g_{i−1}) ∘ g, v₀ ++ ⋯)`.
pub fn tl_mult<S: Semiring>(outer: &FreeTerm<S>) -> Result<FreeTerm<S>> {
    let mut block = Matrix::zero(0, 0);
    let mut v = Vec::new();
    for e in &outer.v {
        let inner = e
            .downcast::<FreeTerm<S>>()
            .ok_or_else(|| malformed(format!("{e} is not a term over {}", S::name())))?;
        block = Matrix::direct_sum(&block, &inner.g);
        v.extend(inner.v.iter().cloned());
    }
    FreeTerm::new(outer.g.compose(&block)?, v)
}

/// Compares the normal forms of `κ_m(f ∘ g, v)` and `κ_i(g, v ∘ f)`.
pub fn tl_relation_check<S: Semiring>(f: &Aleph0Map, g: &Matrix<S>, v: &[Elem]) -> Result<bool> {
    if g.rows() != 1 || g.cols() != f.dom() || v.len() != f.cod() {
        return Err(Error::DimensionMismatch(format!(
            "relation needs g: 1 -> {}, v of length {}; got {}x{} and {}",
            f.dom(),
            f.cod(),
            g.rows(),
            g.cols(),
            v.len()
        )));
    }
    let left = FreeTerm::new(g.compose(&f.embed())?, v.to_vec())?;
    let right = FreeTerm::new(g.clone(), f.table().iter().map(|&j| v[j].clone()).collect())?;
    Ok(left.normalize()? == right.normalize()?)
}

/// Stars every coefficient (the `1 × 1` dagger of each column of `g`).
pub fn tl_involution<S: Involutive>(t: &FreeTerm<S>) -> FreeTerm<S> {
    FreeTerm { g: t.g.map(S::star), v: t.v.clone() }
}

/// The unit of the theory/Kleisli adjunction at `f: n → m`: component `i`
/// normalizes `κ_m(f ∘ κ_i, (0, …, m−1))`.
pub fn law_unit_functor<S: Semiring>(f: &Matrix<S>) -> Result<KleisliMap<MultisetMonad<S>>> {
    let (n, m) = (f.rows(), f.cols());
    let tuple: Vec<Elem> = (0..m).map(Elem::Idx).collect();
    let components = (0..n)
        .map(|i| {
            let pick = Matrix::from_fn(1, n, |_, j| if i == j { S::one() } else { S::zero() });
            FreeTerm::new(pick.compose(f)?, tuple.clone())?.normalize()
        })
        .collect::<Result<Vec<_>>>()?;
    KleisliMap::new(m, components)
}

/// `T_{Mat(S)}` as a monad on representatives.
///
/// Values are compared syntactically; the quotient is visible only
/// through [`FreeTerm::normalize`].
#[derive(Debug, Clone, Copy, Default)]
pub struct FreeTheory<S>(PhantomData<S>);

impl<S: Semiring> Monad for FreeTheory<S> {
    type Value = FreeTerm<S>;

    fn name() -> String {
        format!("T_Mat({})", S::name())
    }

    fn unit(x: Elem) -> FreeTerm<S> {
        tl_unit(x)
    }

    fn fmap(f: &CarrierMap, u: &FreeTerm<S>) -> Result<FreeTerm<S>> {
        let v = u.v.iter().map(|x| f.apply(x)).collect::<Result<Vec<_>>>()?;
        Ok(FreeTerm { g: u.g.clone(), v })
    }

    fn mult(uu: &FreeTerm<S>) -> Result<FreeTerm<S>> {
        tl_mult(uu)
    }

    fn support(u: &FreeTerm<S>) -> FiniteCarrier {
        FiniteCarrier::new(u.v.iter().cloned())
    }

    fn values_over_empty() -> Vec<FreeTerm<S>> {
        vec![FreeTerm { g: Matrix::zero(1, 0), v: Vec::new() }]
    }

    fn sample_value(rng: &mut dyn RngCore, carrier: &FiniteCarrier, max_support: usize) -> FreeTerm<S> {
        FreeTerm::random(rng, carrier, max_support)
    }

    fn one_pool() -> Vec<FreeTerm<S>> {
        S::pool()
            .into_iter()
            .map(|s| FreeTerm { g: Matrix::from_fn(1, 1, |_, _| s.clone()), v: vec![Elem::Star] })
            .collect()
    }

    fn extract(e: &Elem) -> Result<FreeTerm<S>> {
        e.downcast::<FreeTerm<S>>()
            .cloned()
            .ok_or_else(|| malformed(format!("{e} is not a term over {}", S::name())))
    }
}

impl<S: Semiring> AdditiveMonad for FreeTheory<S> {
    /// `κ_{i+j}(⟨g, h⟩, inl∘v ++ inr∘w)`.
    fn bc_inv(u: &FreeTerm<S>, w: &FreeTerm<S>) -> FreeTerm<S> {
        let g = Matrix::tuple(&u.g, &w.g).expect("terms have one row");
        let v = u
            .v
            .iter()
            .map(|x| Elem::inl(x.clone()))
            .chain(w.v.iter().map(|y| Elem::inr(y.clone())))
            .collect();
        FreeTerm { g, v }
    }
}

impl<S: Involutive> InvolutiveMonad for FreeTheory<S> {
    fn involution(u: &FreeTerm<S>) -> FreeTerm<S> {
        tl_involution(u)
    }
}
