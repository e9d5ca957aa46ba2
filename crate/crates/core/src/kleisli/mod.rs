//! The finitary Kleisli category `Kl_ℕ(T)`.
//!
//! Objects are natural numbers; a map `n → m` is a list of `n` values of
//! `T` over the carrier `{0, …, m−1}`. For an additive commutative monad
//! the category is isomorphic to `Mat(T(1))` through [`theta`] and [`xi`].

use std::fmt;

use rand::RngCore;

use crate::algebra::Semiring;
use crate::error::{Error, Result};
use crate::matcat::{Aleph0Map, Matrix};
use crate::monadcore::derived::{self, empty_value};
use crate::monadcore::{
    bc, bc_inv, dst, map_with, scalar_action, tx_add, tx_zero, AdditiveMonad, AtOne, CarrierMap, CommutativeMonad,
    Elem, FiniteCarrier, InvolutiveMonad, Monad, Multiset, MultisetMonad,
};

/// A map `n → m` in `Kl_ℕ(T)`.
pub struct KleisliMap<T: Monad> {
    cod: usize,
    components: Vec<T::Value>,
}

impl<T: Monad> Clone for KleisliMap<T> {
    fn clone(&self) -> Self {
        KleisliMap { cod: self.cod, components: self.components.clone() }
    }
}

impl<T: Monad> PartialEq for KleisliMap<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cod == other.cod && self.components == other.components
    }
}

impl<T: Monad> Eq for KleisliMap<T> {}

impl<T: Monad> fmt::Debug for KleisliMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KleisliMap({} -> {}: {:?})", self.dom(), self.cod, self.components)
    }
}

impl<T: Monad> fmt::Display for KleisliMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} [", self.dom(), self.cod)?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn idx(e: &Elem) -> Result<usize> {
    e.as_idx()
        .ok_or_else(|| Error::ElementOutsideCarrier(format!("{e} is not an index")))
}

impl<T: Monad> KleisliMap<T> {
    /// Checks that every component lives over `{0, …, cod−1}`.
    pub fn new(cod: usize, components: Vec<T::Value>) -> Result<Self> {
        let carrier = FiniteCarrier::range(cod);
        for (i, c) in components.iter().enumerate() {
            if !T::support(c).is_subset(&carrier) {
                return Err(Error::ElementOutsideCarrier(format!("component {i} = {c} is not over {carrier}")));
            }
        }
        Ok(KleisliMap { cod, components })
    }

    pub fn dom(&self) -> usize {
        self.components.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn components(&self) -> &[T::Value] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &T::Value {
        &self.components[i]
    }

    /// `η` at each index.
    pub fn identity(n: usize) -> Self {
        KleisliMap { cod: n, components: (0..n).map(|i| T::unit(Elem::Idx(i))).collect() }
    }

    /// The image of a function of finite sets, `η ∘ f`.
    pub fn from_aleph0(f: &Aleph0Map) -> Self {
        KleisliMap { cod: f.cod(), components: f.table().iter().map(|&j| T::unit(Elem::Idx(j))).collect() }
    }

    /// A random map; each component mentions at most `max_support` indices.
    pub fn random(rng: &mut dyn RngCore, n: usize, m: usize, max_support: usize) -> Result<Self> {
        let carrier = FiniteCarrier::range(m);
        let components = (0..n)
            .map(|_| if m == 0 { empty_value::<T>() } else { Ok(T::sample_value(rng, &carrier, max_support)) })
            .collect::<Result<Vec<_>>>()?;
        Ok(KleisliMap { cod: m, components })
    }

    /// `then ⊙ self = μ ∘ T(then) ∘ self`.
    pub fn compose(&self, then: &KleisliMap<T>) -> Result<Self> {
        if self.cod != then.dom() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {} -> {} with {} -> {}",
                self.dom(),
                self.cod,
                then.dom(),
                then.cod
            )));
        }
        let table = CarrierMap::from_fn(&FiniteCarrier::range(self.cod), |e| {
            T::embed(then.components[e.as_idx().expect("index carrier")].clone())
        });
        let components = self
            .components
            .iter()
            .map(|u| T::mult(&T::fmap(&table, u)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(KleisliMap { cod: then.cod, components })
    }

    /// `κ₁: n → n + m`.
    pub fn coproj1(n: usize, m: usize) -> Self {
        KleisliMap { cod: n + m, components: (0..n).map(|i| T::unit(Elem::Idx(i))).collect() }
    }

    /// `κ₂: m → n + m`.
    pub fn coproj2(n: usize, m: usize) -> Self {
        KleisliMap { cod: n + m, components: (0..m).map(|i| T::unit(Elem::Idx(n + i))).collect() }
    }

    /// `[f, g]: n + m → p`.
    pub fn cotuple(f: &KleisliMap<T>, g: &KleisliMap<T>) -> Result<Self> {
        if f.cod != g.cod {
            return Err(Error::DimensionMismatch(format!("cotuple of maps into {} and {}", f.cod, g.cod)));
        }
        let components = f.components.iter().chain(&g.components).cloned().collect();
        Ok(KleisliMap { cod: f.cod, components })
    }

    /// The zero map `n → m`, factoring through `T(0)`.
    pub fn zero(n: usize, m: usize) -> Result<Self> {
        let z = tx_zero::<T>()?;
        Ok(KleisliMap { cod: m, components: vec![z; n] })
    }

    fn tagged(n: usize, c: usize) -> Elem {
        if c < n {
            Elem::inl(Elem::Idx(c))
        } else {
            Elem::inr(Elem::Idx(c - n))
        }
    }

    fn untag(u: &T::Value, n: usize) -> Result<T::Value> {
        map_with::<T>(u, |e| match e {
            Elem::Inl(a) => Ok(Elem::Idx(idx(a)?)),
            Elem::Inr(b) => Ok(Elem::Idx(n + idx(b)?)),
            _ => Err(Error::ElementOutsideCarrier(format!("{e} is not in a sum"))),
        })
    }

    /// `p₁ = [η, 0]: n + m → n`.
    pub fn proj1(n: usize, m: usize) -> Result<Self> {
        let components = (0..n + m)
            .map(|c| {
                let u = derived::first_projection::<T>(&Self::tagged(n, c))?;
                map_with::<T>(&u, |e| Ok(Elem::Idx(idx(e)?)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(KleisliMap { cod: n, components })
    }

    /// `p₂ = [0, η]: n + m → m`.
    pub fn proj2(n: usize, m: usize) -> Result<Self> {
        let components = (0..n + m)
            .map(|c| derived::second_projection::<T>(&Self::tagged(n, c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(KleisliMap { cod: m, components })
    }
}

impl<T: AdditiveMonad> KleisliMap<T> {
    /// `⟨f, g⟩: p → n + m`, merging components with `bc⁻¹`.
    pub fn tuple(f: &KleisliMap<T>, g: &KleisliMap<T>) -> Result<Self> {
        if f.dom() != g.dom() {
            return Err(Error::DimensionMismatch(format!("tuple of maps out of {} and {}", f.dom(), g.dom())));
        }
        let components = f
            .components
            .iter()
            .zip(&g.components)
            .map(|(u, v)| Self::untag(&bc_inv::<T>(u, v), f.cod))
            .collect::<Result<Vec<_>>>()?;
        Ok(KleisliMap { cod: f.cod + g.cod, components })
    }

    /// `f ⊕ g = [κ₁ ⊙ f, κ₂ ⊙ g]`.
    pub fn direct_sum(f: &KleisliMap<T>, g: &KleisliMap<T>) -> Result<Self> {
        let left = f.compose(&Self::coproj1(f.cod, g.cod))?;
        let right = g.compose(&Self::coproj2(f.cod, g.cod))?;
        Self::cotuple(&left, &right)
    }

    /// The homset sum `∇ ⊙ (f ⊕ g) ⊙ Δ`.
    pub fn homset_add(f: &KleisliMap<T>, g: &KleisliMap<T>) -> Result<Self> {
        if (f.dom(), f.cod) != (g.dom(), g.cod) {
            return Err(Error::DimensionMismatch(format!("cannot add {f} and {g}")));
        }
        let (n, m) = (f.dom(), f.cod);
        let diagonal = Self::tuple(&Self::identity(n), &Self::identity(n))?;
        let codiagonal = Self::cotuple(&Self::identity(m), &Self::identity(m))?;
        diagonal.compose(&Self::direct_sum(f, g)?)?.compose(&codiagonal)
    }

    /// Componentwise `T(∇) ∘ bc⁻¹`.
    pub fn pointwise_add(f: &KleisliMap<T>, g: &KleisliMap<T>) -> Result<Self> {
        if (f.dom(), f.cod) != (g.dom(), g.cod) {
            return Err(Error::DimensionMismatch(format!("cannot add {f} and {g}")));
        }
        let components = f
            .components
            .iter()
            .zip(&g.components)
            .map(|(u, v)| tx_add::<T>(u, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(KleisliMap { cod: f.cod, components })
    }
}

impl<T: CommutativeMonad> KleisliMap<T> {
    /// `f ⊗ g: n·m → p·q`; component `i·m + i′` is `T(join)(dst(f_i, g_i′))`.
    pub fn tensor(f: &KleisliMap<T>, g: &KleisliMap<T>) -> Result<Self> {
        let q = g.cod;
        let mut components = Vec::with_capacity(f.dom() * g.dom());
        for u in &f.components {
            for v in &g.components {
                let joined = map_with::<T>(&dst::<T>(u, v)?, |e| {
                    let (a, b) = e
                        .as_pair()
                        .ok_or_else(|| Error::ElementOutsideCarrier(format!("{e} is not a pair")))?;
                    Ok(Elem::Idx(idx(a)? * q + idx(b)?))
                })?;
                components.push(joined);
            }
        }
        Ok(KleisliMap { cod: f.cod * q, components })
    }
}

/// `bc_m: T(m) → T(1)^m`, iterating binary `bc` with `m = (m−1) + 1`.
pub fn bc_m<T: Monad>(u: &T::Value, m: usize) -> Result<Vec<T::Value>> {
    match m {
        0 => Ok(Vec::new()),
        1 => Ok(vec![map_with::<T>(u, |e| idx(e).map(|_| Elem::Star))?]),
        _ => {
            let last = m - 1;
            let tagged = map_with::<T>(u, |e| {
                let c = idx(e)?;
                Ok(if c < last { Elem::inl(Elem::Idx(c)) } else { Elem::inr(Elem::Star) })
            })?;
            let (rest, tail) = bc::<T>(&tagged)?;
            let mut coords = bc_m::<T>(&rest, last)?;
            coords.push(tail);
            Ok(coords)
        }
    }
}

/// The inverse of [`bc_m`], iterating `bc⁻¹`.
pub fn bc_m_inv<T: AdditiveMonad>(coords: &[T::Value]) -> Result<T::Value> {
    match coords {
        [] => tx_zero::<T>(),
        [only] => map_with::<T>(only, |_| Ok(Elem::Idx(0))),
        [rest @ .., tail] => {
            let last = rest.len();
            let merged = bc_inv::<T>(&bc_m_inv::<T>(rest)?, tail);
            map_with::<T>(&merged, |e| match e {
                Elem::Inl(a) => Ok(Elem::Idx(idx(a)?)),
                Elem::Inr(_) => Ok(Elem::Idx(last)),
                _ => Err(Error::ElementOutsideCarrier(format!("{e} is not in a sum"))),
            })
        }
    }
}

/// `θ`: entry `(i, j)` is the `j`-th coordinate of `bc_m` at component `i`.
pub fn theta<T: AdditiveMonad + CommutativeMonad>(k: &KleisliMap<T>) -> Result<Matrix<AtOne<T>>> {
    let mut entries = Vec::with_capacity(k.dom() * k.cod());
    for u in &k.components {
        entries.extend(bc_m::<T>(u, k.cod)?.into_iter().map(AtOne));
    }
    Matrix::new(k.dom(), k.cod, entries)
}

/// `ξ`: component `i` is `bc_m⁻¹` of row `i`.
pub fn xi<T: AdditiveMonad + CommutativeMonad>(h: &Matrix<AtOne<T>>) -> Result<KleisliMap<T>> {
    let components = (0..h.rows())
        .map(|i| {
            let coords: Vec<T::Value> = h.row(i).iter().map(|a| a.0.clone()).collect();
            bc_m_inv::<T>(&coords)
        })
        .collect::<Result<Vec<_>>>()?;
    KleisliMap::new(h.cols(), components)
}

/// The dagger induced by the involution: `f†(j) = Σ_i bc_m(ζ(f_i))[j] ⋆ η(i)`.
pub fn kl_dagger<T>(f: &KleisliMap<T>) -> Result<KleisliMap<T>>
where
    T: AdditiveMonad + CommutativeMonad + InvolutiveMonad,
{
    let coords = f
        .components
        .iter()
        .map(|u| bc_m::<T>(&T::involution(u), f.cod))
        .collect::<Result<Vec<_>>>()?;
    let components = (0..f.cod)
        .map(|j| {
            coords.iter().enumerate().try_fold(tx_zero::<T>()?, |acc, (i, row)| {
                tx_add::<T>(&acc, &scalar_action::<T>(&row[j], &T::unit(Elem::Idx(i)))?)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KleisliMap { cod: f.dom(), components })
}

/// `θ` for `M_S` followed by `φ ↦ φ(★)`.
pub fn theta_scalars<S: Semiring>(k: &KleisliMap<MultisetMonad<S>>) -> Result<Matrix<S>> {
    Ok(theta(k)?.map(|a| a.0.get(&Elem::Star)))
}

/// `s ↦ {★: s}` followed by `ξ`.
pub fn xi_scalars<S: Semiring>(h: &Matrix<S>) -> Result<KleisliMap<MultisetMonad<S>>> {
    xi(&h.map(|s| AtOne::<MultisetMonad<S>>(Multiset::singleton(Elem::Star, s.clone()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GaussianRational, Nat};
    use crate::monadcore::{t1_mul, ActionMonad};
    use crate::Word;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type Kl = KleisliMap<MultisetMonad<Nat>>;

    fn ms(pairs: &[(usize, u64)]) -> Multiset<Nat> {
        Multiset::from_pairs(pairs.iter().map(|&(i, n)| (Elem::Idx(i), Nat::new(n))))
    }

    #[test]
    fn composition_expands_the_multiplication() {
        let f = Kl::new(2, vec![ms(&[(0, 2), (1, 1)])]).unwrap();
        let g = Kl::new(1, vec![ms(&[(0, 3)]), ms(&[(0, 1)])]).unwrap();
        assert_eq!(f.compose(&g).unwrap().components(), &[ms(&[(0, 7)])]);
        assert_eq!(g.compose(&Kl::identity(1)).unwrap(), g);
        assert!(matches!(g.compose(&g), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn biproduct_equations() {
        let p1 = Kl::proj1(2, 3).unwrap();
        let p2 = Kl::proj2(2, 3).unwrap();
        assert_eq!(Kl::coproj1(2, 3).compose(&p1).unwrap(), Kl::identity(2));
        assert_eq!(Kl::coproj1(2, 3).compose(&p2).unwrap(), Kl::zero(2, 3).unwrap());
        assert_eq!(Kl::coproj2(2, 3).compose(&p2).unwrap(), Kl::identity(3));
        let f = Kl::new(2, vec![ms(&[(0, 2)]), ms(&[(1, 5), (0, 1)])]).unwrap();
        let g = Kl::new(3, vec![ms(&[(2, 4)]), ms(&[])]).unwrap();
        let t = Kl::tuple(&f, &g).unwrap();
        assert_eq!(t.components()[0], ms(&[(0, 2), (4, 4)]));
        assert_eq!(t.compose(&p1).unwrap(), f);
        assert_eq!(t.compose(&p2).unwrap(), g);
    }

    #[test]
    fn tensor_multiplies_and_flattens() {
        let f = Kl::new(1, vec![ms(&[(0, 2)])]).unwrap();
        let g = Kl::new(1, vec![ms(&[(0, 3)])]).unwrap();
        assert_eq!(Kl::tensor(&f, &g).unwrap().components(), &[ms(&[(0, 6)])]);
        assert_eq!(Kl::tensor(&Kl::identity(1), &Kl::identity(1)).unwrap(), Kl::identity(1));
    }

    #[test]
    fn xi_and_theta_are_inverse() {
        let h = Matrix::from_rows(vec![vec![Nat::new(2), Nat::new(3)]]).unwrap();
        let k = xi_scalars(&h).unwrap();
        assert_eq!(k.components(), &[ms(&[(0, 2), (1, 3)])]);
        assert_eq!(theta_scalars(&k).unwrap(), h);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let k = Kl::random(&mut rng, 3, 4, 3).unwrap();
            assert_eq!(xi(&theta(&k).unwrap()).unwrap(), k);
        }
    }

    #[test]
    fn bc_m_of_the_empty_object() {
        assert!(bc_m::<MultisetMonad<Nat>>(&Multiset::empty(), 0).unwrap().is_empty());
        assert_eq!(bc_m_inv::<MultisetMonad<Nat>>(&[]).unwrap(), Multiset::empty());
    }

    #[test]
    fn homset_sum_agrees_with_pointwise_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let f = Kl::random(&mut rng, 2, 3, 3).unwrap();
            let g = Kl::random(&mut rng, 2, 3, 3).unwrap();
            assert_eq!(Kl::homset_add(&f, &g).unwrap(), Kl::pointwise_add(&f, &g).unwrap());
        }
    }

    #[test]
    fn endomaps_of_one_multiply_like_t_one() {
        let a = Kl::new(1, vec![ms(&[(0, 2)])]).unwrap();
        let b = Kl::new(1, vec![ms(&[(0, 5)])]).unwrap();
        let star = |n| Multiset::singleton(Elem::Star, Nat::new(n));
        let prod = t1_mul::<MultisetMonad<Nat>>(&star(2), &star(5)).unwrap();
        assert_eq!(theta(&a.compose(&b).unwrap()).unwrap().get(0, 0).0, prod);
    }

    #[test]
    fn dagger_conjugates_and_transposes() {
        type G = KleisliMap<MultisetMonad<GaussianRational>>;
        let h = Matrix::from_rows(vec![
            vec![GaussianRational::int(1, 2), GaussianRational::int(0, 0), GaussianRational::int(0, -1)],
            vec![GaussianRational::int(3, 0), GaussianRational::int(1, 1), GaussianRational::int(0, 0)],
        ])
        .unwrap();
        let f: G = xi_scalars(&h).unwrap();
        assert_eq!(theta_scalars(&kl_dagger(&f).unwrap()).unwrap(), h.dagger());
    }

    #[test]
    fn non_additive_monads_have_no_zero_maps() {
        type A = KleisliMap<ActionMonad<Word>>;
        assert!(matches!(A::zero(1, 1), Err(Error::NotAdditive(_))));
        assert!(matches!(A::proj1(1, 1), Err(Error::NotAdditive(_))));
        assert_eq!(A::coproj1(1, 1).compose(&A::identity(2)).unwrap(), A::coproj1(1, 1));
    }
}
