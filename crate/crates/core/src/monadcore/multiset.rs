//! The multiset monad `M_S` of finitely supported `S`-weighted sums.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use super::carrier::{CarrierMap, FiniteCarrier};
use super::elem::Elem;
use super::monad::{AdditiveMonad, CommutativeMonad, InvolutiveMonad, Monad};
use crate::algebra::{Involutive, Semiring};
use crate::error::{Error, Result};

/// A finitely supported function `X → S` with no zero entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Multiset<S> {
    entries: BTreeMap<Elem, S>,
}

impl<S: Semiring> Multiset<S> {
    pub fn empty() -> Self {
        Multiset { entries: BTreeMap::new() }
    }

    /// Builds `Σ sᵢxᵢ`, adding repeated keys and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Elem, S)>) -> Self {
        let mut entries: BTreeMap<Elem, S> = BTreeMap::new();
        for (x, s) in pairs {
            let slot = entries.entry(x).or_insert_with(S::zero);
            *slot = slot.clone() + s;
        }
        entries.retain(|_, s| !s.is_zero());
        Multiset { entries }
    }

    pub fn singleton(x: Elem, s: S) -> Self {
        Self::from_pairs([(x, s)])
    }

    /// The multiplicity of `x` (zero when absent).
    pub fn get(&self, x: &Elem) -> S {
        self.entries.get(x).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Elem, &S)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> FiniteCarrier {
        FiniteCarrier::new(self.entries.keys().cloned())
    }

    pub fn map_scalars(&self, f: impl Fn(&S) -> S) -> Self {
        Self::from_pairs(self.iter().map(|(x, s)| (x.clone(), f(s))))
    }

    /// Pointwise semiring sum.
    pub fn pointwise_add(&self, other: &Self) -> Self {
        Self::from_pairs(self.iter().chain(other.iter()).map(|(x, s)| (x.clone(), s.clone())))
    }
}

impl<S: fmt::Display> fmt::Display for Multiset<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (x, s)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}: {s}")?;
        }
        f.write_str("}")
    }
}

/// `M_S(f)(φ)(y) = Σ_{x ∈ f⁻¹(y)} φ(x)`.
pub fn ms_fmap<S: Semiring>(f: &CarrierMap, phi: &Multiset<S>) -> Result<Multiset<S>> {
    let pairs = phi
        .iter()
        .map(|(x, s)| Ok((f.apply(x)?, s.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Multiset::from_pairs(pairs))
}

/// `η(x) = 1x`.
pub fn ms_unit<S: Semiring>(x: Elem) -> Multiset<S> {
    Multiset::singleton(x, S::one())
}

/// `μ(Σ sᵢφᵢ)(x) = Σ sᵢ·φᵢ(x)`.
pub fn ms_mult<S: Semiring>(outer: &Multiset<S>) -> Result<Multiset<S>> {
    let mut pairs = Vec::new();
    for (key, s) in outer.iter() {
        let inner = key
            .downcast::<Multiset<S>>()
            .ok_or_else(|| Error::KeyNotMultiset(key.to_string()))?;
        pairs.extend(inner.iter().map(|(x, t)| (x.clone(), s.clone() * t.clone())));
    }
    Ok(Multiset::from_pairs(pairs))
}

/// The double strength of `M_S`: `(φ, ψ) ↦ Σ φ(x)·ψ(y) (x, y)`.
pub fn ms_dst<S: Semiring>(phi: &Multiset<S>, psi: &Multiset<S>) -> Multiset<S> {
    Multiset::from_pairs(
        phi.iter()
            .flat_map(|(x, s)| psi.iter().map(move |(y, t)| (Elem::pair(x.clone(), y.clone()), s.clone() * t.clone()))),
    )
}

/// `ζ(Σ sᵢxᵢ) = Σ sᵢ* xᵢ`.
pub fn ms_involution<S: Involutive>(phi: &Multiset<S>) -> Multiset<S> {
    phi.map_scalars(S::star)
}

/// The multiset monad over the semiring `S`.
#[derive(Debug, Clone, Copy, Default)]
pub struct MultisetMonad<S>(PhantomData<S>);

impl<S: Semiring> Monad for MultisetMonad<S> {
    type Value = Multiset<S>;

    fn name() -> String {
        format!("M_{}", S::name())
    }

    fn unit(x: Elem) -> Multiset<S> {
        ms_unit(x)
    }

    fn fmap(f: &CarrierMap, u: &Multiset<S>) -> Result<Multiset<S>> {
        ms_fmap(f, u)
    }

    fn mult(uu: &Multiset<S>) -> Result<Multiset<S>> {
        ms_mult(uu)
    }

    fn support(u: &Multiset<S>) -> FiniteCarrier {
        u.support()
    }

    fn values_over_empty() -> Vec<Multiset<S>> {
        vec![Multiset::empty()]
    }

    fn sample_value(rng: &mut dyn RngCore, carrier: &FiniteCarrier, max_support: usize) -> Multiset<S> {
        let k = rng.gen_range(0..=max_support.min(carrier.len()));
        let chosen: Vec<&Elem> = carrier.elems().choose_multiple(rng, k).collect();
        Multiset::from_pairs(chosen.into_iter().map(|x| (x.clone(), S::sample(rng))).collect::<Vec<_>>())
    }

    fn one_pool() -> Vec<Multiset<S>> {
        S::pool().into_iter().map(|s| Multiset::singleton(Elem::Star, s)).collect()
    }

    fn extract(e: &Elem) -> Result<Multiset<S>> {
        e.downcast::<Multiset<S>>()
            .cloned()
            .ok_or_else(|| Error::KeyNotMultiset(e.to_string()))
    }
}

impl<S: Semiring> AdditiveMonad for MultisetMonad<S> {
    fn bc_inv(u: &Multiset<S>, v: &Multiset<S>) -> Multiset<S> {
        Multiset::from_pairs(
            u.iter()
                .map(|(x, s)| (Elem::inl(x.clone()), s.clone()))
                .chain(v.iter().map(|(y, t)| (Elem::inr(y.clone()), t.clone()))),
        )
    }
}

impl<S: Semiring> CommutativeMonad for MultisetMonad<S> {}

impl<S: Involutive> InvolutiveMonad for MultisetMonad<S> {
    fn involution(u: &Multiset<S>) -> Multiset<S> {
        ms_involution(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Boolean, GaussianRational, Nat, Tropical};
    use proptest::prelude::*;

    fn a(s: &str) -> Elem {
        Elem::sym(s)
    }

    fn nat(pairs: &[(&str, u64)]) -> Multiset<Nat> {
        Multiset::from_pairs(pairs.iter().map(|&(x, n)| (a(x), Nat::new(n))))
    }

    #[test]
    fn fmap_sums_over_preimages() {
        let f = CarrierMap::from_table([(a("a"), a("u")), (a("b"), a("u")), (a("c"), a("v"))]);
        let phi = nat(&[("a", 2), ("b", 3), ("c", 1)]);
        assert_eq!(ms_fmap(&f, &phi).unwrap(), nat(&[("u", 5), ("v", 1)]));
        let id = CarrierMap::identity(&phi.support());
        assert_eq!(ms_fmap(&id, &phi).unwrap(), phi);
        assert_eq!(ms_fmap(&f, &Multiset::<Nat>::empty()).unwrap(), Multiset::empty());
        let partial = CarrierMap::from_table([(a("a"), a("u"))]);
        assert_eq!(ms_fmap(&partial, &phi), Err(Error::ElementOutsideCarrier("b".into())));
    }

    #[test]
    fn unit_is_one_times_x() {
        assert_eq!(ms_unit::<Nat>(a("x")).to_string(), "{x: 1}");
        assert_eq!(ms_unit::<Boolean>(a("x")).get(&a("x")), Boolean(true));
        assert_eq!(ms_unit::<Tropical>(a("x")).get(&a("x")), Tropical::fin(0));
    }

    #[test]
    fn mult_expands_the_double_sum() {
        let phi1 = nat(&[("a", 1), ("b", 3)]);
        let phi2 = nat(&[("b", 2)]);
        let outer = Multiset::from_pairs([(Elem::val(phi1), Nat::new(2)), (Elem::val(phi2), Nat::new(1))]);
        assert_eq!(ms_mult(&outer).unwrap(), nat(&[("a", 2), ("b", 8)]));
        let unit = Multiset::singleton(Elem::val(ms_unit::<Nat>(a("x"))), Nat::new(1));
        assert_eq!(ms_mult(&unit).unwrap(), nat(&[("x", 1)]));
        assert_eq!(ms_mult(&Multiset::<Nat>::empty()).unwrap(), Multiset::empty());
        let bad = Multiset::singleton(a("x"), Nat::new(1));
        assert_eq!(ms_mult(&bad), Err(Error::KeyNotMultiset("x".into())));
    }

    #[test]
    fn dst_is_the_pointwise_product() {
        let phi = nat(&[("a", 2), ("b", 1)]);
        let psi = nat(&[("x", 3)]);
        assert_eq!(ms_dst(&phi, &psi).to_string(), "{(a,x): 6, (b,x): 3}");
        assert!(ms_dst(&Multiset::empty(), &psi).is_empty());
        let t = Multiset::singleton(a("a"), Boolean(true));
        let u = Multiset::singleton(a("x"), Boolean(true));
        assert_eq!(ms_dst(&t, &u).to_string(), "{(a,x): 1}");
    }

    #[test]
    fn involution_conjugates() {
        let phi = Multiset::singleton(a("a"), GaussianRational::int(1, 2));
        assert_eq!(ms_involution(&phi).get(&a("a")), GaussianRational::int(1, -2));
        assert_eq!(ms_involution(&ms_involution(&phi)), phi);
        let n = nat(&[("a", 4)]);
        assert_eq!(ms_involution(&n), n);
    }

    #[test]
    fn zero_entries_are_pruned() {
        let m = Multiset::from_pairs([(a("a"), Tropical::Inf), (a("b"), Tropical::fin(2))]);
        assert_eq!(m.len(), 1);
        assert_eq!(m.get(&a("a")), Tropical::Inf);
    }

    proptest! {
        #[test]
        fn from_pairs_is_canonical(pairs in proptest::collection::vec((0usize..4, 0u64..4), 0..8)) {
            let m = Multiset::from_pairs(pairs.iter().map(|&(x, n)| (Elem::Idx(x), Nat::new(n))));
            let mut permuted = pairs.clone();
            permuted.reverse();
            let m2 = Multiset::from_pairs(permuted.iter().map(|&(x, n)| (Elem::Idx(x), Nat::new(n))));
            prop_assert_eq!(&m, &m2);
            prop_assert!(m.iter().all(|(_, s)| *s != Nat::new(0)));
            for x in 0..4 {
                let total: u64 = pairs.iter().filter(|p| p.0 == x).map(|p| p.1).sum();
                prop_assert_eq!(m.get(&Elem::Idx(x)), Nat::new(total));
            }
        }
    }
}
