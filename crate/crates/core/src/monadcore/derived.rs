//! Structure derived generically from `η`, `μ`, `T(−)` and `bc⁻¹`.
//!
//! Nothing here inspects a particular monad: every operation is the
//! composite of monad operations that defines it, so comparing the results
//! with direct definitions (pointwise sums, products) is a genuine check.

use std::fmt;

use super::carrier::{CarrierMap, FiniteCarrier};
use super::elem::Elem;
use super::monad::{AdditiveMonad, CommutativeMonad, Monad};
use crate::error::{Error, Result};

/// `T(f)(u)` with `f` tabulated over the support of `u`.
pub fn map_with<T: Monad>(u: &T::Value, f: impl Fn(&Elem) -> Result<Elem>) -> Result<T::Value> {
    let table = CarrierMap::try_from_fn(&T::support(u), f)?;
    T::fmap(&table, u)
}

fn not_a_pair(e: &Elem) -> Error {
    Error::ElementOutsideCarrier(format!("{e} is not a pair"))
}

fn first(e: &Elem) -> Result<Elem> {
    e.as_pair().map(|(a, _)| a.clone()).ok_or_else(|| not_a_pair(e))
}

fn second(e: &Elem) -> Result<Elem> {
    e.as_pair().map(|(_, b)| b.clone()).ok_or_else(|| not_a_pair(e))
}

fn swap(e: &Elem) -> Result<Elem> {
    e.swapped().ok_or_else(|| not_a_pair(e))
}

/// The codiagonal `∇ = [id, id]: X + X → X`.
pub fn codiagonal(e: &Elem) -> Result<Elem> {
    match e {
        Elem::Inl(x) | Elem::Inr(x) => Ok((**x).clone()),
        _ => Err(Error::ElementOutsideCarrier(format!("{e} is not in a sum"))),
    }
}

/// The strength `st: T(X) × Y → T(X × Y)`, `st(u, y) = T(x ↦ (x, y))(u)`.
pub fn strength<T: Monad>(u: &T::Value, y: &Elem) -> Result<T::Value> {
    map_with::<T>(u, |x| Ok(Elem::pair(x.clone(), y.clone())))
}

/// The swapped strength `st′ = T(γ) ∘ st ∘ γ: X × T(Y) → T(X × Y)`.
pub fn swapped_strength<T: Monad>(x: &Elem, v: &T::Value) -> Result<T::Value> {
    let st = strength::<T>(v, x)?;
    map_with::<T>(&st, swap)
}

/// `μ ∘ T(st′) ∘ st: T(X) × T(Y) → T(X × Y)`.
pub fn strength_then_swapped<T: Monad>(u: &T::Value, v: &T::Value) -> Result<T::Value> {
    let outer = strength::<T>(u, &T::embed(v.clone()))?;
    let nested = map_with::<T>(&outer, |p| {
        let (x, inner) = p.as_pair().ok_or_else(|| not_a_pair(p))?;
        Ok(T::embed(swapped_strength::<T>(x, &T::extract(inner)?)?))
    })?;
    T::mult(&nested)
}

/// `μ ∘ T(st) ∘ st′: T(X) × T(Y) → T(X × Y)`.
pub fn swapped_then_strength<T: Monad>(u: &T::Value, v: &T::Value) -> Result<T::Value> {
    let outer = swapped_strength::<T>(&T::embed(u.clone()), v)?;
    let nested = map_with::<T>(&outer, |p| {
        let (inner, y) = p.as_pair().ok_or_else(|| not_a_pair(p))?;
        Ok(T::embed(strength::<T>(&T::extract(inner)?, y)?))
    })?;
    T::mult(&nested)
}

/// Whether the two double-strength composites agree on a pair of values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Commutation<V> {
    Equal(V),
    Counterexample { left: V, right: V },
}

impl<V: fmt::Display> fmt::Display for Commutation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Commutation::Equal(v) => write!(f, "equal: {v}"),
            Commutation::Counterexample { left, right } => write!(f, "{left} != {right}"),
        }
    }
}

/// Evaluates both composites `μ∘T(st′)∘st` and `μ∘T(st)∘st′` on `(u, v)`.
pub fn commutativity_witness<T: Monad>(u: &T::Value, v: &T::Value) -> Result<Commutation<T::Value>> {
    let left = strength_then_swapped::<T>(u, v)?;
    let right = swapped_then_strength::<T>(u, v)?;
    Ok(if left == right {
        Commutation::Equal(left)
    } else {
        Commutation::Counterexample { left, right }
    })
}

/// The double strength `dst: T(X) × T(Y) → T(X × Y)` of a commutative monad.
pub fn dst<T: CommutativeMonad>(u: &T::Value, v: &T::Value) -> Result<T::Value> {
    strength_then_swapped::<T>(u, v)
}

/// The unique value of `T(0)`, or `NotAdditive` if there is not exactly one.
pub fn empty_value<T: Monad>() -> Result<T::Value> {
    let mut values = T::values_over_empty();
    match values.len() {
        1 => Ok(values.remove(0)),
        n => Err(Error::NotAdditive(format!("{} has {n} values over the empty set", T::name()))),
    }
}

/// The zero map `0: X → 1 ≅ T(0) → T(Y)`; its value is independent of `X`.
pub fn tx_zero<T: Monad>() -> Result<T::Value> {
    T::fmap(&CarrierMap::empty(), &empty_value::<T>()?)
}

/// The first Kleisli projection `p₁ = [η, 0]: X + Y → T(X)`.
pub fn first_projection<T: Monad>(e: &Elem) -> Result<T::Value> {
    match e {
        Elem::Inl(x) => Ok(T::unit((**x).clone())),
        Elem::Inr(_) => tx_zero::<T>(),
        _ => Err(Error::ElementOutsideCarrier(format!("{e} is not in a sum"))),
    }
}

/// The second Kleisli projection `p₂ = [0, η]: X + Y → T(Y)`.
pub fn second_projection<T: Monad>(e: &Elem) -> Result<T::Value> {
    match e {
        Elem::Inl(_) => tx_zero::<T>(),
        Elem::Inr(y) => Ok(T::unit((**y).clone())),
        _ => Err(Error::ElementOutsideCarrier(format!("{e} is not in a sum"))),
    }
}

/// `bc = ⟨μ ∘ T(p₁), μ ∘ T(p₂)⟩: T(X + Y) → T(X) × T(Y)`.
pub fn bc<T: Monad>(w: &T::Value) -> Result<(T::Value, T::Value)> {
    let left = map_with::<T>(w, |e| Ok(T::embed(first_projection::<T>(e)?)))?;
    let right = map_with::<T>(w, |e| Ok(T::embed(second_projection::<T>(e)?)))?;
    Ok((T::mult(&left)?, T::mult(&right)?))
}

/// `bc⁻¹` as provided by the instance.
pub fn bc_inv<T: AdditiveMonad>(u: &T::Value, v: &T::Value) -> T::Value {
    T::bc_inv(u, v)
}

/// The addition `T(∇) ∘ bc⁻¹` on `T(X)`.
pub fn tx_add<T: AdditiveMonad>(u: &T::Value, v: &T::Value) -> Result<T::Value> {
    map_with::<T>(&T::bc_inv(u, v), codiagonal)
}

/// Like [`tx_add`], additionally checking that both values live over `carrier`.
pub fn tx_add_over<T: AdditiveMonad>(carrier: &FiniteCarrier, u: &T::Value, v: &T::Value) -> Result<T::Value> {
    for w in [u, v] {
        if !T::support(w).is_subset(carrier) {
            return Err(Error::CarrierMismatch(format!("{w} is not a value over {carrier}")));
        }
    }
    tx_add::<T>(u, v)
}

/// The multiplication `μ ∘ T(π₂) ∘ st: T(1) × T(1) → T(1)`.
pub fn t1_mul<T: Monad>(a: &T::Value, b: &T::Value) -> Result<T::Value> {
    let st = strength::<T>(a, &T::embed(b.clone()))?;
    T::mult(&map_with::<T>(&st, second)?)
}

/// The unit `η(★)` of `T(1)`.
pub fn t1_unit<T: Monad>() -> T::Value {
    T::unit(Elem::Star)
}

/// The action `⋆ = T(λ) ∘ dst: T(1) × T(X) → T(X)`.
pub fn scalar_action<T: CommutativeMonad>(s: &T::Value, u: &T::Value) -> Result<T::Value> {
    map_with::<T>(&dst::<T>(s, u)?, second)
}

/// `μ ∘ T(π₂) ∘ st`, the action expressed through strength alone.
pub fn scalar_action_by_strength<T: Monad>(s: &T::Value, u: &T::Value) -> Result<T::Value> {
    let st = strength::<T>(s, &T::embed(u.clone()))?;
    T::mult(&map_with::<T>(&st, second)?)
}

/// `π₁` on pairs, exposed for law checks.
pub fn project_first(e: &Elem) -> Result<Elem> {
    first(e)
}

/// `π₂` on pairs, exposed for law checks.
pub fn project_second(e: &Elem) -> Result<Elem> {
    second(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Multiplicative, Nat, Tropical, Word};
    use crate::monadcore::{ms_dst, ActValue, ActionMonad, Multiset, MultisetMonad};

    type MN = MultisetMonad<Nat>;

    fn ms(pairs: &[(&str, u64)]) -> Multiset<Nat> {
        Multiset::from_pairs(pairs.iter().map(|&(x, n)| (Elem::sym(x), Nat::new(n))))
    }

    fn star(n: u64) -> Multiset<Nat> {
        Multiset::singleton(Elem::Star, Nat::new(n))
    }

    #[test]
    fn strength_pairs_under_fmap() {
        let y = Elem::sym("y");
        assert_eq!(strength::<MN>(&ms(&[("a", 2)]), &y).unwrap().to_string(), "{(a,y): 2}");
        assert!(strength::<MN>(&Multiset::empty(), &y).unwrap().is_empty());
        let act = ActValue::new(Word::new("m").unwrap(), Elem::sym("x"));
        let st = strength::<ActionMonad<Word>>(&act, &y).unwrap();
        assert_eq!(st, ActValue::new(Word::new("m").unwrap(), Elem::pair(Elem::sym("x"), y)));
    }

    #[test]
    fn multisets_commute() {
        let c = commutativity_witness::<MN>(&ms(&[("a", 2)]), &ms(&[("x", 3)])).unwrap();
        assert_eq!(c.to_string(), "equal: {(a,x): 6}");
    }

    #[test]
    fn free_words_do_not_commute() {
        let u = ActValue::new(Word::new("ab").unwrap(), Elem::sym("x"));
        let v = ActValue::new(Word::new("cd").unwrap(), Elem::sym("y"));
        match commutativity_witness::<ActionMonad<Word>>(&u, &v).unwrap() {
            Commutation::Counterexample { left, right } => {
                assert_eq!(left.to_string(), "<abcd, (x,y)>");
                assert_eq!(right.to_string(), "<cdab, (x,y)>");
            }
            other => panic!("expected a counterexample, got {other}"),
        }
    }

    #[test]
    fn commutative_action_monad_agrees() {
        type A = ActionMonad<Multiplicative<Nat>>;
        let u = ActValue::new(Multiplicative(Nat::new(2)), Elem::sym("x"));
        let v = ActValue::new(Multiplicative(Nat::new(5)), Elem::sym("y"));
        let expected = ActValue::new(Multiplicative(Nat::new(10)), Elem::pair(Elem::sym("x"), Elem::sym("y")));
        assert_eq!(commutativity_witness::<A>(&u, &v).unwrap(), Commutation::Equal(expected));
    }

    #[test]
    fn generic_dst_matches_pointwise_product() {
        let phi = ms(&[("a", 2), ("b", 1)]);
        let psi = ms(&[("x", 3), ("y", 4)]);
        assert_eq!(dst::<MN>(&phi, &psi).unwrap(), ms_dst(&phi, &psi));
    }

    #[test]
    fn bc_restricts_along_coprojections() {
        let w = Multiset::from_pairs([
            (Elem::inl(Elem::sym("a")), Nat::new(2)),
            (Elem::inr(Elem::sym("b")), Nat::new(3)),
        ]);
        let (l, r) = bc::<MN>(&w).unwrap();
        assert_eq!((l.clone(), r.clone()), (ms(&[("a", 2)]), ms(&[("b", 3)])));
        assert_eq!(bc_inv::<MN>(&l, &r), w);
        let (l0, r0) = bc::<MN>(&Multiset::empty()).unwrap();
        assert!(l0.is_empty() && r0.is_empty());
    }

    #[test]
    fn addition_matches_pointwise_sums() {
        let sum = tx_add::<MN>(&ms(&[("a", 2)]), &ms(&[("a", 3), ("b", 1)])).unwrap();
        assert_eq!(sum, ms(&[("a", 5), ("b", 1)]));
        type MT = MultisetMonad<Tropical>;
        let t = |n| Multiset::singleton(Elem::sym("a"), Tropical::fin(n));
        assert_eq!(tx_add::<MT>(&t(2), &t(5)).unwrap(), t(2));
        let u = ms(&[("a", 4)]);
        assert_eq!(tx_add::<MN>(&u, &tx_zero::<MN>().unwrap()).unwrap(), u);
    }

    #[test]
    fn addition_checks_the_carrier() {
        let carrier = FiniteCarrier::symbols(&["a"]);
        let err = tx_add_over::<MN>(&carrier, &ms(&[("a", 1)]), &ms(&[("b", 1)])).unwrap_err();
        assert!(matches!(err, Error::CarrierMismatch(_)));
    }

    #[test]
    fn action_monads_are_not_additive() {
        assert!(matches!(tx_zero::<ActionMonad<Word>>(), Err(Error::NotAdditive(_))));
    }

    #[test]
    fn t1_operations() {
        assert_eq!(t1_mul::<MN>(&star(2), &star(3)).unwrap(), star(6));
        assert_eq!(tx_add::<MN>(&star(2), &star(3)).unwrap(), star(5));
        let w = |s: &str| ActValue::new(Word::new(s).unwrap(), Elem::Star);
        assert_eq!(t1_mul::<ActionMonad<Word>>(&w("ab"), &w("c")).unwrap(), w("abc"));
    }

    #[test]
    fn scalar_action_scales() {
        let u = ms(&[("a", 2), ("b", 1)]);
        assert_eq!(scalar_action::<MN>(&star(3), &u).unwrap(), ms(&[("a", 6), ("b", 3)]));
        assert_eq!(scalar_action::<MN>(&star(1), &u).unwrap(), u);
        assert!(scalar_action::<MN>(&star(0), &u).unwrap().is_empty());
        assert_eq!(scalar_action_by_strength::<MN>(&star(3), &u).unwrap(), ms(&[("a", 6), ("b", 3)]));
    }
}
