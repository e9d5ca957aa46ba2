//! Round trips through the three adjunctions, with law checks on every
//! transposed map.

use rand_chacha::ChaCha8Rng;

use super::sampling::{self as sample, Sampler};
use super::transposes::{
    transpose_math_down, transpose_math_up, transpose_mon_down, transpose_mon_up, transpose_srng_down,
    transpose_srng_up,
};
use super::witness::{canonical, MonadMap, MonoidMap, SemiringMap, TheoryFunctor};
use crate::algebra::{Involutive, Monoid, Multiplicative, Nat, Semiring, Word};
use crate::error::Result;
use crate::matcat::{HomOne, Matrix};
use crate::monadcore::{
    bc, map_with, strength, ActValue, ActionMonad, AdditiveMonad, AtOne, CommutativeMonad, Elem, InvolutiveMonad,
    Monad, Multiset, MultisetMonad,
};
use crate::report::{expect, expect_eq, CaseResult, LawReport};

fn run(r: &mut LawReport, s: &Sampler, law: &str, cases: usize, mut case: impl FnMut(&mut ChaCha8Rng) -> CaseResult) {
    let mut rng = s.rng(law);
    r.check(law, cases, |_| case(&mut rng));
}

fn value_over<T: Monad>(rng: &mut ChaCha8Rng, prefix: &str) -> T::Value {
    let c = sample::carrier(rng, prefix);
    sample::value::<T>(rng, &c)
}

/// Naturality and preservation of unit, multiplication and strength.
pub fn monad_map_laws<T1: Monad, T2: Monad>(s: &Sampler, cases: usize, sigma: &MonadMap<T1, T2>) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, "natural", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let f = sample::map(rng, &x, &y);
        let u = sample::value::<T1>(rng, &x);
        expect_eq("s(T1(f)(u)) vs T2(f)(s(u))", &sigma.apply(&T1::fmap(&f, &u)?)?, &T2::fmap(&f, &sigma.apply(&u)?)?)
    });
    run(&mut r, s, "preserves unit", cases, |rng| {
        let c = sample::carrier(rng, "x");
        let x0 = c.elems()[0].clone();
        expect_eq("s(eta(x))", &sigma.apply(&T1::unit(x0.clone()))?, &T2::unit(x0))
    });
    run(&mut r, s, "preserves multiplication", cases, |rng| {
        let c = sample::carrier(rng, "x");
        let p = sample::nested::<T1>(rng, &c);
        let inner = map_with::<T1>(&p, |e| Ok(T2::embed(sigma.apply(&T1::extract(e)?)?)))?;
        expect_eq("s(mu(P)) vs mu(s(T1(s)(P)))", &sigma.apply(&T1::mult(&p)?)?, &T2::mult(&sigma.apply(&inner)?)?)
    });
    run(&mut r, s, "preserves strength", cases, |rng| {
        let u = value_over::<T1>(rng, "x");
        let y0 = Elem::sym("y0");
        expect_eq("s(st(u, y)) vs st(s(u), y)", &sigma.apply(&strength::<T1>(&u, &y0)?)?, &strength::<T2>(&sigma.apply(&u)?, &y0)?)
    });
    r
}

/// For additive source and target: `(σ × σ) ∘ bc = bc ∘ σ`.
pub fn monad_map_bc_law<T1: AdditiveMonad, T2: AdditiveMonad>(s: &Sampler, cases: usize, sigma: &MonadMap<T1, T2>) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, "preserves bc", cases, |rng| {
        let xy = crate::monadcore::FiniteCarrier::sum(&sample::carrier(rng, "x"), &sample::carrier(rng, "y"));
        let w = sample::value::<T1>(rng, &xy);
        let (a, b) = bc::<T1>(&w)?;
        let (p, q) = bc::<T2>(&sigma.apply(&w)?)?;
        let (sa, sb) = (sigma.apply(&a)?, sigma.apply(&b)?);
        expect((&sa, &sb) == (&p, &q), || format!("({sa}, {sb}) != ({p}, {q})"))
    });
    r
}

/// Round trip for one monoid map `f: M → E(T)`.
pub fn mon_roundtrip<M: Monoid, T: Monad>(s: &Sampler, cases: usize, f: &MonoidMap<M, T>) -> Result<LawReport> {
    let up = transpose_mon_up(f);
    let mut r = monad_map_laws(s, cases, &up).prefixed("transposed");
    let down = transpose_mon_down(&up)?;
    let pool = M::pool();
    r.check("down after up", pool.len(), |i| expect_eq("f(m)", &down.apply(&pool[i])?, &f.apply(&pool[i])?));
    let again = transpose_mon_up(&down);
    run(&mut r, s, "up after down", cases, |rng| {
        let u = value_over::<ActionMonad<M>>(rng, "x");
        expect_eq("s(m, x)", &again.apply(&u)?, &up.apply(&u)?)
    });
    run(&mut r, s, "unit goes to unit", cases, |rng| {
        let x0 = Elem::sym(&format!("x{}", rand::Rng::gen_range(rng, 0..sample::MAX_CARRIER)));
        expect_eq("f(1, x)", &up.apply(&ActValue::new(M::unit(), x0.clone()))?, &T::unit(x0))
    });
    Ok(r.prefixed(f.name()))
}

/// Round trip for one semiring map `f: S → E(T)`.
pub fn srng_roundtrip<S, T>(s: &Sampler, cases: usize, f: &SemiringMap<S, AtOne<T>>) -> Result<LawReport>
where
    S: Semiring,
    T: AdditiveMonad + CommutativeMonad,
{
    let up = transpose_srng_up(f);
    let mut r = monad_map_laws(s, cases, &up).prefixed("transposed");
    r.extend(monad_map_bc_law(s, cases, &up).prefixed("transposed"));
    let down = transpose_srng_down(&up)?;
    let pool = S::pool();
    r.check("down after up", pool.len(), |i| expect_eq("f(s)", &down.apply(&pool[i])?, &f.apply(&pool[i])?));
    let again = transpose_srng_up(&down);
    run(&mut r, s, "up after down", cases, |rng| {
        let phi = value_over::<MultisetMonad<S>>(rng, "x");
        expect_eq("s(phi)", &again.apply(&phi)?, &up.apply(&phi)?)
    });
    Ok(r.prefixed(f.name()))
}

/// `f̄(φ) = {x: f(φ(x))(★)}` for maps into `E(M_R)`, checked entrywise.
pub fn srng_entrywise<S: Semiring, R: Semiring>(
    s: &Sampler,
    cases: usize,
    f: &SemiringMap<S, AtOne<MultisetMonad<R>>>,
) -> LawReport {
    let up = transpose_srng_up(f);
    let mut r = LawReport::new();
    run(&mut r, s, "transposed acts entrywise", cases, |rng| {
        let phi = value_over::<MultisetMonad<S>>(rng, "x");
        let mut want = Vec::new();
        for (x, a) in phi.iter() {
            want.push((x.clone(), f.apply(a)?.0.get(&Elem::Star)));
        }
        expect_eq("f(phi)", &up.apply(&phi)?, &Multiset::from_pairs(want))
    });
    r.prefixed(f.name())
}

/// Transposition commutes with precomposition: `(f ∘ g)‾ = f̄ ∘ M(g)`.
pub fn srng_naturality<Q: Semiring, S: Semiring, T: AdditiveMonad + CommutativeMonad>(
    s: &Sampler,
    cases: usize,
    f: &SemiringMap<S, AtOne<T>>,
    g: &SemiringMap<Q, S>,
) -> LawReport {
    let (lhs, rhs) = (transpose_srng_up(&f.after(g)), transpose_srng_up(f));
    let mut r = LawReport::new();
    run(&mut r, s, "transpose natural in the semiring", cases, |rng| {
        let phi = value_over::<MultisetMonad<Q>>(rng, "x");
        let mut moved = Vec::new();
        for (x, a) in phi.iter() {
            moved.push((x.clone(), g.apply(a)?));
        }
        expect_eq("(f.g)(phi) vs f(M(g)(phi))", &lhs.apply(&phi)?, &rhs.apply(&Multiset::from_pairs(moved))?)
    });
    r.prefixed(&format!("{} after {}", f.name(), g.name()))
}

/// Both transposes of a star-preserving `f` commute with the involutions.
pub fn srng_involutive<S, T>(s: &Sampler, cases: usize, f: &SemiringMap<S, AtOne<T>>) -> Result<LawReport>
where
    S: Involutive,
    T: AdditiveMonad + CommutativeMonad + InvolutiveMonad,
{
    let up = transpose_srng_up(f);
    let down = transpose_srng_down(&up)?;
    let mut r = LawReport::new();
    let pool = S::pool();
    r.check("cotranspose preserves star", pool.len(), |i| {
        let a = &pool[i];
        expect_eq("f(a*) vs f(a)*", &down.apply(&a.star())?, &down.apply(a)?.star())
    });
    run(&mut r, s, "transpose commutes with involution", cases, |rng| {
        let phi = value_over::<MultisetMonad<S>>(rng, "x");
        let lhs = up.apply(&MultisetMonad::<S>::involution(&phi))?;
        expect_eq("f(zeta(phi)) vs zeta(f(phi))", &lhs, &T::involution(&up.apply(&phi)?))
    });
    Ok(r.prefixed(f.name()))
}

/// Identity, composition, biproduct and tensor structure are preserved.
pub fn functor_laws<S: Semiring, R: Semiring>(s: &Sampler, cases: usize, functor: &TheoryFunctor<S, R>) -> LawReport {
    let mut r = LawReport::new();
    let d = |rng: &mut ChaCha8Rng| sample::dim(rng);
    run(&mut r, s, "preserves composition", cases, |rng| {
        let (a, b, c) = (d(rng), d(rng), d(rng));
        let (f, g) = (sample::matrix::<S>(rng, a, b), sample::matrix::<S>(rng, b, c));
        expect_eq("F(g.f)", &functor.apply(&f.compose(&g)?)?, &functor.apply(&f)?.compose(&functor.apply(&g)?)?)
    });
    run(&mut r, s, "preserves structure maps", cases, |rng| {
        let (a, b) = (d(rng), d(rng));
        expect_eq("F(id)", &functor.apply(&Matrix::identity(a))?, &Matrix::identity(a))?;
        expect_eq("F(k1)", &functor.apply(&Matrix::coproj1(a, b))?, &Matrix::coproj1(a, b))?;
        expect_eq("F(k2)", &functor.apply(&Matrix::coproj2(a, b))?, &Matrix::coproj2(a, b))?;
        expect_eq("F(p1)", &functor.apply(&Matrix::proj1(a, b))?, &Matrix::proj1(a, b))?;
        expect_eq("F(p2)", &functor.apply(&Matrix::proj2(a, b))?, &Matrix::proj2(a, b))
    });
    run(&mut r, s, "preserves tensor", cases, |rng| {
        let (a, b) = (d(rng).min(2), d(rng).min(2));
        let (f, g) = (sample::matrix::<S>(rng, a, 2), sample::matrix::<S>(rng, 2, b));
        expect_eq("F(f x g)", &functor.apply(&Matrix::tensor(&f, &g))?, &Matrix::tensor(&functor.apply(&f)?, &functor.apply(&g)?))
    });
    run(&mut r, s, "preserves sums", cases, |rng| {
        let (a, b) = (d(rng), d(rng));
        let (f, g) = (sample::matrix::<S>(rng, a, b), sample::matrix::<S>(rng, a, b));
        expect_eq("F(f+g)", &functor.apply(&Matrix::homset_add(&f, &g)?)?, &Matrix::homset_add(&functor.apply(&f)?, &functor.apply(&g)?)?)
    });
    r
}

/// Round trip for one semiring map `f: S → H(Mat(R))`, plus the entrywise oracle.
pub fn math_roundtrip<S: Semiring, R: Semiring>(s: &Sampler, cases: usize, f: &SemiringMap<S, HomOne<R>>) -> Result<LawReport> {
    let up = transpose_math_up(f);
    let mut r = functor_laws(s, cases, &up).prefixed("transposed");
    let down = transpose_math_down(&up)?;
    let pool = S::pool();
    r.check("down after up", pool.len(), |i| expect_eq("f(s)", &down.apply(&pool[i])?, &f.apply(&pool[i])?));
    let again = transpose_math_up(&down);
    run(&mut r, s, "up after down", cases, |rng| {
        let h = sample::any_matrix::<S>(rng);
        expect_eq("F(h)", &again.apply(&h)?, &up.apply(&h)?)
    });
    run(&mut r, s, "transposed acts entrywise", cases, |rng| {
        let h = sample::any_matrix::<S>(rng);
        let entries = h.entries().iter().map(|a| Ok(f.apply(a)?.scalar().clone())).collect::<Result<Vec<R>>>()?;
        expect_eq("F(h)", &up.apply(&h)?, &Matrix::new(h.rows(), h.cols(), entries)?)
    });
    Ok(r.prefixed(f.name()))
}

/// `(f ∘ g)‾ = f̄ ∘ Mat(g)`.
pub fn math_naturality<Q: Semiring, S: Semiring, R: Semiring>(
    s: &Sampler,
    cases: usize,
    f: &SemiringMap<S, HomOne<R>>,
    g: &SemiringMap<Q, S>,
) -> LawReport {
    let (lhs, rhs) = (transpose_math_up(&f.after(g)), transpose_math_up(f));
    let mut r = LawReport::new();
    run(&mut r, s, "transpose natural in the semiring", cases, |rng| {
        let h = sample::any_matrix::<Q>(rng);
        let entries = h.entries().iter().map(|a| g.apply(a)).collect::<Result<Vec<S>>>()?;
        let moved = Matrix::new(h.rows(), h.cols(), entries)?;
        expect_eq("(f.g)(h) vs f(Mat(g)(h))", &lhs.apply(&h)?, &rhs.apply(&moved)?)
    });
    r.prefixed(&format!("{} after {}", f.name(), g.name()))
}

/// Both transposes of a star-preserving `f` commute with star and dagger.
pub fn math_involutive<S: Involutive, R: Involutive>(s: &Sampler, cases: usize, f: &SemiringMap<S, HomOne<R>>) -> Result<LawReport> {
    let up = transpose_math_up(f);
    let down = transpose_math_down(&up)?;
    let mut r = LawReport::new();
    let pool = S::pool();
    r.check("cotranspose preserves star", pool.len(), |i| {
        let a = &pool[i];
        expect_eq("f(a*) vs f(a)*", &down.apply(&a.star())?, &down.apply(a)?.star())
    });
    run(&mut r, s, "transpose preserves dagger", cases, |rng| {
        let h = sample::any_matrix::<S>(rng);
        expect_eq("F(h dagger)", &up.apply(&h.dagger())?, &up.apply(&h)?.dagger())
    });
    Ok(r.prefixed(f.name()))
}

/// Monoid maps `S· → E(M_S)`: identity, squaring and the trivial map.
pub fn mul_witnesses<S: Semiring>() -> Result<Vec<MonoidMap<Multiplicative<S>, MultisetMonad<S>>>> {
    let pool = Multiplicative::<S>::pool();
    Ok(vec![
        MonoidMap::new("identity", &pool, |m: &Multiplicative<S>| Ok(Multiset::singleton(Elem::Star, m.0.clone())))?,
        MonoidMap::new("square", &pool, |m: &Multiplicative<S>| {
            Ok(Multiset::singleton(Elem::Star, m.0.clone() * m.0.clone()))
        })?,
        MonoidMap::new("trivial", &pool, |_: &Multiplicative<S>| Ok(MultisetMonad::<S>::unit(Elem::Star)))?,
    ])
}

/// `w ↦ {★: 2^|w|}` into `E(M_S)`.
pub fn word_length_witness<S: Semiring>() -> Result<MonoidMap<Word, MultisetMonad<S>>> {
    MonoidMap::new("two to the length", &Word::pool(), |w: &Word| {
        let two = S::one() + S::one();
        let weight = w.letters().chars().fold(S::one(), |acc, _| acc * two.clone());
        Ok(Multiset::singleton(Elem::Star, weight))
    })
}

/// Monoid maps `Words → E(A(Words))`: identity and the letter swap `a ↔ b`.
pub fn word_action_witnesses() -> Result<Vec<MonoidMap<Word, ActionMonad<Word>>>> {
    let swap = |w: &Word| -> Result<Word> {
        let swapped: String = w
            .letters()
            .chars()
            .map(|c| match c {
                'a' => 'b',
                'b' => 'a',
                other => other,
            })
            .collect();
        Word::new(&swapped)
    };
    let pool = Word::pool();
    Ok(vec![
        MonoidMap::new("identity", &pool, |w: &Word| Ok(ActValue::new(w.clone(), Elem::Star)))?,
        MonoidMap::new("swap a and b", &pool, move |w: &Word| Ok(ActValue::new(swap(w)?, Elem::Star)))?,
    ])
}

/// The oracle `f̄(s, x) = {x: s}` for the identity `S· → E(M_S)`.
pub fn mon_identity_oracle<S: Semiring>(s: &Sampler, cases: usize) -> Result<LawReport> {
    let f = mul_witnesses::<S>()?.remove(0);
    let up = transpose_mon_up(&f);
    let mut r = LawReport::new();
    run(&mut r, s, "transposed identity is scalar times point", cases, |rng| {
        let u = value_over::<ActionMonad<Multiplicative<S>>>(rng, "x");
        expect_eq("f(s, x)", &up.apply(&u)?, &Multiset::from_pairs([(u.elem.clone(), u.scalar.0.clone())]))
    });
    Ok(r)
}

/// Semiring maps into `E(M_S)`: `s ↦ {★: s}`.
pub fn srng_identity<S: Semiring>() -> Result<SemiringMap<S, AtOne<MultisetMonad<S>>>> {
    SemiringMap::new("identity", &S::pool(), |a: &S| Ok(AtOne(Multiset::singleton(Elem::Star, a.clone()))))
}

/// `s ↦ {★: s*}`.
pub fn srng_conjugation<S: Involutive>() -> Result<SemiringMap<S, AtOne<MultisetMonad<S>>>> {
    SemiringMap::new("conjugation", &S::pool(), |a: &S| Ok(AtOne(Multiset::singleton(Elem::Star, a.star()))))
}

/// Semiring maps into `H(Mat(S))`: `s ↦ [s]`.
pub fn math_identity<S: Semiring>() -> Result<SemiringMap<S, HomOne<S>>> {
    SemiringMap::new("identity", &S::pool(), |a: &S| Ok(HomOne::of(a.clone())))
}

/// `s ↦ [s*]`.
pub fn math_conjugation<S: Involutive>() -> Result<SemiringMap<S, HomOne<S>>> {
    SemiringMap::new("conjugation", &S::pool(), |a: &S| Ok(HomOne::of(a.star())))
}

/// The canonical map `ℕ → E(M_S)`.
pub fn srng_canonical<S: Semiring>() -> Result<SemiringMap<Nat, AtOne<MultisetMonad<S>>>> {
    Ok(srng_identity::<S>()?.after(&canonical::<S>()?))
}

/// The canonical map `ℕ → H(Mat(S))`.
pub fn math_canonical<S: Semiring>() -> Result<SemiringMap<Nat, HomOne<S>>> {
    Ok(math_identity::<S>()?.after(&canonical::<S>()?))
}
