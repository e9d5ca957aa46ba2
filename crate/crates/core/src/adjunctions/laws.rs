//! Sampled law checks. Each function returns one outcome per law.

use std::collections::BTreeMap;
use std::fmt::Display;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::sampling::{self as sample, Sampler};
use crate::algebra::{
    check_monoid_laws, check_semiring_laws, Involutive, Monoid, Semiring, SemiringDescriptor,
};
use crate::error::Result;
use crate::freetheory::{law_unit_functor, FreeTheory, tl_involution, tl_mult, tl_relation_check, tl_unit, FreeTerm};
use crate::kleisli::{kl_dagger, theta, xi, KleisliMap};
use crate::matcat::{homset_semiring, Aleph0Map, HomOne, Matrix};
use crate::monadcore::derived::{project_first, scalar_action_by_strength};
use crate::monadcore::{
    bc, commutativity_witness, dst, eval_at_one, eval_at_one_monoid, first_projection, map_with, ms_dst, ms_fmap,
    ms_involution, ms_mult, ms_unit, scalar_action, second_projection, strength, t1_mul, t1_unit, tx_add, tx_zero,
    ActValue, ActionMonad, AdditiveMonad, AtOne, CarrierMap, Commutation, CommutativeMonad, Elem, FiniteCarrier,
    InvolutiveMonad, Monad, Multiset, MultisetMonad,
};
use crate::report::{expect, expect_eq, CaseResult, Failure, LawReport};

fn run(r: &mut LawReport, s: &Sampler, law: &str, cases: usize, mut case: impl FnMut(&mut ChaCha8Rng) -> CaseResult) {
    let mut rng = s.rng(law);
    r.check(law, cases, |_| case(&mut rng));
}

fn eq_pair<A: PartialEq + Display, B: PartialEq + Display>(what: &str, lhs: (A, B), rhs: (A, B)) -> CaseResult {
    expect(lhs == rhs, || format!("{what}: ({}, {}) != ({}, {})", lhs.0, lhs.1, rhs.0, rhs.1))
}

fn pick(rng: &mut ChaCha8Rng, carrier: &FiniteCarrier) -> Elem {
    carrier.elems().choose(rng).expect("nonempty carrier").clone()
}

fn pairs<A: Clone>(pool: &[A]) -> Vec<(A, A)> {
    pool.iter().flat_map(|a| pool.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

fn sum_map(f: &CarrierMap, g: &CarrierMap, sum: &FiniteCarrier) -> Result<CarrierMap> {
    CarrierMap::try_from_fn(sum, |e| match e {
        Elem::Inl(x) => Ok(Elem::inl(f.apply(x)?)),
        Elem::Inr(y) => Ok(Elem::inr(g.apply(y)?)),
        _ => unreachable!("sum carriers hold tagged elements"),
    })
}

/// Unit, associativity, functor, naturality and strength laws.
pub fn monad_laws<T: Monad>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, "multiply after unit", cases, |rng| {
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("mu(eta(u))", &T::mult(&T::unit(T::embed(u.clone())))?, &u)
    });
    run(&mut r, s, "multiply after mapped unit", cases, |rng| {
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        let lifted = map_with::<T>(&u, |x| Ok(T::embed(T::unit(x.clone()))))?;
        expect_eq("mu(T(eta)(u))", &T::mult(&lifted)?, &u)
    });
    run(&mut r, s, "multiply associative", cases, |rng| {
        let p = { let c = sample::carrier(rng, "x"); sample::nested3::<T>(rng, &c) };
        let lhs = T::mult(&T::mult(&p)?)?;
        let rhs = T::mult(&map_with::<T>(&p, |e| Ok(T::embed(T::mult(&T::extract(e)?)?)))?)?;
        expect_eq("mu(mu(P)) vs mu(T(mu)(P))", &lhs, &rhs)
    });
    run(&mut r, s, "functor identity", cases, |rng| {
        let x = sample::carrier(rng, "x");
        let u = sample::value::<T>(rng, &x);
        expect_eq("T(id)(u)", &T::fmap(&CarrierMap::identity(&x), &u)?, &u)
    });
    run(&mut r, s, "functor composition", cases, |rng| {
        let (x, y, z) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"), sample::carrier(rng, "z"));
        let (f, g) = (sample::map(rng, &x, &y), sample::map(rng, &y, &z));
        let u = sample::value::<T>(rng, &x);
        expect_eq("T(g.f)(u) vs T(g)(T(f)(u))", &T::fmap(&f.then(&g)?, &u)?, &T::fmap(&g, &T::fmap(&f, &u)?)?)
    });
    run(&mut r, s, "unit natural", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let f = sample::map(rng, &x, &y);
        let x0 = pick(rng, &x);
        expect_eq("T(f)(eta(x))", &T::fmap(&f, &T::unit(x0.clone()))?, &T::unit(f.apply(&x0)?))
    });
    run(&mut r, s, "multiply natural", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let f = sample::map(rng, &x, &y);
        let p = sample::nested::<T>(rng, &x);
        let lhs = T::fmap(&f, &T::mult(&p)?)?;
        let rhs = T::mult(&map_with::<T>(&p, |e| Ok(T::embed(T::fmap(&f, &T::extract(e)?)?)))?)?;
        expect_eq("T(f)(mu(P)) vs mu(TT(f)(P))", &lhs, &rhs)
    });
    run(&mut r, s, "strength after unit", cases, |rng| {
        let x0 = { let c = sample::carrier(rng, "x"); pick(rng, &c) };
        let y0 = Elem::sym("y0");
        expect_eq("st(eta(x), y)", &strength::<T>(&T::unit(x0.clone()), &y0)?, &T::unit(Elem::pair(x0, y0)))
    });
    run(&mut r, s, "strength after multiply", cases, |rng| {
        let p = { let c = sample::carrier(rng, "x"); sample::nested::<T>(rng, &c) };
        let y0 = Elem::sym("y0");
        let lhs = strength::<T>(&T::mult(&p)?, &y0)?;
        let inner = map_with::<T>(&strength::<T>(&p, &y0)?, |e| {
            let (u, y) = e.as_pair().expect("strength produces pairs");
            Ok(T::embed(strength::<T>(&T::extract(u)?, y)?))
        })?;
        expect_eq("st(mu(P), y) vs mu(T(st)(st(P, y)))", &lhs, &T::mult(&inner)?)
    });
    run(&mut r, s, "strength unitor", cases, |rng| {
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("T(pi1)(st(u, star))", &map_with::<T>(&strength::<T>(&u, &Elem::Star)?, project_first)?, &u)
    });
    run(&mut r, s, "strength natural", cases, |rng| {
        let (x, x2) = (sample::carrier(rng, "x"), sample::carrier(rng, "w"));
        let f = sample::map(rng, &x, &x2);
        let u = sample::value::<T>(rng, &x);
        let y0 = Elem::sym("y0");
        let lhs = strength::<T>(&T::fmap(&f, &u)?, &y0)?;
        let rhs = map_with::<T>(&strength::<T>(&u, &y0)?, |e| {
            let (a, b) = e.as_pair().expect("strength produces pairs");
            Ok(Elem::pair(f.apply(a)?, b.clone()))
        })?;
        expect_eq("st(T(f)(u), y) vs T(f x id)(st(u, y))", &lhs, &rhs)
    });
    r
}

/// `E(T)` is a monoid under `μ ∘ T(π₂) ∘ st`, isomorphic to `M` via `m ↦ (m, ★)`.
pub fn action_at_one_laws<M: Monoid>() -> Result<LawReport> {
    type A<M> = ActionMonad<M>;
    let pool: Vec<AtOne<A<M>>> = <A<M> as Monad>::one_pool().into_iter().map(AtOne).collect();
    let mut r = check_monoid_laws(&eval_at_one_monoid::<A<M>>(), &pool)?.prefixed("E(T) monoid");
    let ps = pairs(&M::pool());
    r.check("E(T) = M: multiplication", ps.len(), |i| {
        let (a, b) = &ps[i];
        let lhs = t1_mul::<A<M>>(&ActValue::new(a.clone(), Elem::Star), &ActValue::new(b.clone(), Elem::Star))?;
        expect_eq("(a, star)(b, star)", &lhs, &ActValue::new(a.op(b), Elem::Star))
    });
    r.check("E(T) = M: unit", 1, |_| expect_eq("eta(star)", &t1_unit::<A<M>>(), &ActValue::new(M::unit(), Elem::Star)));
    Ok(r)
}

/// The two double-strength composites; `commutative` says whether they
/// are expected to agree or to be separated by some sample.
pub fn commutativity_laws<T: Monad>(s: &Sampler, cases: usize, commutative: bool) -> LawReport {
    let mut r = LawReport::new();
    let law = "double strength composites agree";
    let mut rng = s.rng(law);
    let mut case = move || -> std::result::Result<Option<String>, Failure> {
        let u = { let c = sample::carrier(&mut rng, "x"); sample::value::<T>(&mut rng, &c) };
        let v = { let c = sample::carrier(&mut rng, "y"); sample::value::<T>(&mut rng, &c) };
        Ok(match commutativity_witness::<T>(&u, &v)? {
            Commutation::Equal(_) => None,
            c @ Commutation::Counterexample { .. } => Some(format!("u = {u}, v = {v}: {c}")),
        })
    };
    if commutative {
        r.check(law, cases, |_| match case()? {
            None => Ok(()),
            Some(msg) => Err(Failure(msg)),
        });
    } else {
        r.check_refuted(format!("{law} fails"), cases, |_| case());
    }
    r
}

/// Extra laws of a commutative monad: `dst` via both routes, and the action.
pub fn commutative_extras<T: CommutativeMonad>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, "action via double strength equals action via strength", cases, |rng| {
        let a = sample::value::<T>(rng, &FiniteCarrier::one());
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("T(lambda)(dst(s, u))", &scalar_action::<T>(&a, &u)?, &scalar_action_by_strength::<T>(&a, &u)?)
    });
    run(&mut r, s, "double strength natural", cases, |rng| {
        let (x, y, w) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"), sample::carrier(rng, "w"));
        let f = sample::map(rng, &x, &w);
        let (u, v) = (sample::value::<T>(rng, &x), sample::value::<T>(rng, &y));
        let lhs = dst::<T>(&T::fmap(&f, &u)?, &v)?;
        let rhs = map_with::<T>(&dst::<T>(&u, &v)?, |e| {
            let (a, b) = e.as_pair().expect("dst produces pairs");
            Ok(Elem::pair(f.apply(a)?, b.clone()))
        })?;
        expect_eq("dst(T(f)(u), v) vs T(f x id)(dst(u, v))", &lhs, &rhs)
    });
    r
}

/// `bc` and `bc⁻¹` inverse, the bc-property diagrams and the additive
/// structure on `T(X)`.
pub fn additivity_laws<T: AdditiveMonad>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    let empties = T::values_over_empty();
    r.record(
        "T(0) has exactly one value",
        1,
        (empties.len() != 1).then(|| format!("{} values over the empty set", empties.len())),
    );
    let sum = |rng: &mut ChaCha8Rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let xy = FiniteCarrier::sum(&x, &y);
        (x, y, xy)
    };
    run(&mut r, s, "bc after bc_inv", cases, |rng| {
        let (x, y, _) = sum(rng);
        let (u, v) = (sample::value::<T>(rng, &x), sample::value::<T>(rng, &y));
        eq_pair("bc(bc_inv(u, v))", bc::<T>(&T::bc_inv(&u, &v))?, (u, v))
    });
    run(&mut r, s, "bc_inv after bc", cases, |rng| {
        let (_, _, xy) = sum(rng);
        let w = sample::value::<T>(rng, &xy);
        let (a, b) = bc::<T>(&w)?;
        expect_eq("bc_inv(bc(w))", &T::bc_inv(&a, &b), &w)
    });
    run(&mut r, s, "bc natural", cases, |rng| {
        let (x, y, xy) = sum(rng);
        let (x2, y2) = (sample::carrier(rng, "p"), sample::carrier(rng, "q"));
        let (f, g) = (sample::map(rng, &x, &x2), sample::map(rng, &y, &y2));
        let w = sample::value::<T>(rng, &xy);
        let (a, b) = bc::<T>(&w)?;
        let rhs = bc::<T>(&T::fmap(&sum_map(&f, &g, &xy)?, &w)?)?;
        eq_pair("(T(f) x T(g))(bc(w)) vs bc(T(f+g)(w))", (T::fmap(&f, &a)?, T::fmap(&g, &b)?), rhs)
    });
    run(&mut r, s, "bc right unitor", cases, |rng| {
        let x = sample::carrier(rng, "x");
        let x0 = FiniteCarrier::sum(&x, &FiniteCarrier::empty());
        let w = sample::value::<T>(rng, &x0);
        let (a, _) = bc::<T>(&w)?;
        let rho = map_with::<T>(&w, |e| match e {
            Elem::Inl(x) => Ok((**x).clone()),
            _ => unreachable!("X + 0 has only left elements"),
        })?;
        expect_eq("pi1(bc(w)) vs T(rho)(w)", &a, &rho)
    });
    run(&mut r, s, "bc swap", cases, |rng| {
        let (_, _, xy) = sum(rng);
        let w = sample::value::<T>(rng, &xy);
        let (a, b) = bc::<T>(&w)?;
        let swapped = map_with::<T>(&w, |e| match e {
            Elem::Inl(x) => Ok(Elem::Inr(x.clone())),
            Elem::Inr(y) => Ok(Elem::Inl(y.clone())),
            _ => unreachable!("sum carriers hold tagged elements"),
        })?;
        eq_pair("swap(bc(w)) vs bc(T(swap)(w))", (b, a), bc::<T>(&swapped)?)
    });
    run(&mut r, s, "bc associative", cases, |rng| {
        let (_, _, xy) = sum(rng);
        let z = sample::carrier(rng, "z");
        let w = sample::value::<T>(rng, &FiniteCarrier::sum(&xy, &z));
        let (ab, c) = bc::<T>(&w)?;
        let (a, b) = bc::<T>(&ab)?;
        let assoc = map_with::<T>(&w, |e| {
            Ok(match e {
                Elem::Inl(inner) => match &**inner {
                    Elem::Inl(x) => Elem::Inl(x.clone()),
                    Elem::Inr(y) => Elem::inr(Elem::Inl(y.clone())),
                    _ => unreachable!("sum carriers hold tagged elements"),
                },
                Elem::Inr(z) => Elem::inr(Elem::Inr(z.clone())),
                _ => unreachable!("sum carriers hold tagged elements"),
            })
        })?;
        let (p, q) = bc::<T>(&assoc)?;
        let (qb, qc) = bc::<T>(&q)?;
        expect((&a, &b, &c) == (&p, &qb, &qc), || format!("({a}, ({b}, {c})) != ({p}, ({qb}, {qc}))"))
    });
    run(&mut r, s, "bc after unit", cases, |rng| {
        let (_, _, xy) = sum(rng);
        let e = pick(rng, &xy);
        eq_pair("bc(eta(e)) vs (p1(e), p2(e))", bc::<T>(&T::unit(e.clone()))?, (first_projection::<T>(&e)?, second_projection::<T>(&e)?))
    });
    run(&mut r, s, "bc after multiply", cases, |rng| {
        let (_, _, xy) = sum(rng);
        let p = sample::nested::<T>(rng, &xy);
        let left = T::mult(&map_with::<T>(&p, |e| Ok(T::embed(bc::<T>(&T::extract(e)?)?.0)))?)?;
        let right = T::mult(&map_with::<T>(&p, |e| Ok(T::embed(bc::<T>(&T::extract(e)?)?.1)))?)?;
        eq_pair("bc(mu(P)) vs (mu x mu)(T(pi1), T(pi2))(T(bc)(P))", bc::<T>(&T::mult(&p)?)?, (left, right))
    });
    run(&mut r, s, "bc on a sum of values", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let k = rng.gen_range(1..=2);
        let mut elems: Vec<Elem> = (0..k).map(|_| Elem::inl(T::embed(sample::value::<T>(rng, &x)))).collect();
        elems.extend((0..k).map(|_| Elem::inr(T::embed(sample::value::<T>(rng, &y)))));
        let outer = FiniteCarrier::new(elems);
        let psi = sample::value::<T>(rng, &outer);
        let (a, b) = bc::<T>(&psi)?;
        let injected = map_with::<T>(&psi, |e| match e {
            Elem::Inl(u) => Ok(T::embed(map_with::<T>(&T::extract(u)?, |x| Ok(Elem::inl(x.clone())))?)),
            Elem::Inr(v) => Ok(T::embed(map_with::<T>(&T::extract(v)?, |y| Ok(Elem::inr(y.clone())))?)),
            _ => unreachable!("sum carriers hold tagged elements"),
        })?;
        eq_pair("(mu x mu)(bc(Q)) vs bc(mu(T([T(k1), T(k2)])(Q)))", (T::mult(&a)?, T::mult(&b)?), bc::<T>(&T::mult(&injected)?)?)
    });
    run(&mut r, s, "bc and strength", cases, |rng| {
        let (_, _, xy) = sum(rng);
        let w = sample::value::<T>(rng, &xy);
        let z0 = Elem::sym("z0");
        let (a, b) = bc::<T>(&w)?;
        let distributed = map_with::<T>(&strength::<T>(&w, &z0)?, |e| {
            let (xy, z) = e.as_pair().expect("strength produces pairs");
            Ok(match xy {
                Elem::Inl(x) => Elem::inl(Elem::pair((**x).clone(), z.clone())),
                Elem::Inr(y) => Elem::inr(Elem::pair((**y).clone(), z.clone())),
                _ => unreachable!("sum carriers hold tagged elements"),
            })
        })?;
        eq_pair("(st x st)(bc(w), z) vs bc(T(dist)(st(w, z)))", (strength::<T>(&a, &z0)?, strength::<T>(&b, &z0)?), bc::<T>(&distributed)?)
    });
    run(&mut r, s, "sum associative", cases, |rng| {
        let x = sample::carrier(rng, "x");
        let (u, v, w) = (sample::value::<T>(rng, &x), sample::value::<T>(rng, &x), sample::value::<T>(rng, &x));
        expect_eq("(u+v)+w vs u+(v+w)", &tx_add::<T>(&tx_add::<T>(&u, &v)?, &w)?, &tx_add::<T>(&u, &tx_add::<T>(&v, &w)?)?)
    });
    run(&mut r, s, "sum commutative", cases, |rng| {
        let x = sample::carrier(rng, "x");
        let (u, v) = (sample::value::<T>(rng, &x), sample::value::<T>(rng, &x));
        expect_eq("u+v vs v+u", &tx_add::<T>(&u, &v)?, &tx_add::<T>(&v, &u)?)
    });
    run(&mut r, s, "sum unit", cases, |rng| {
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("u+0", &tx_add::<T>(&u, &tx_zero::<T>()?)?, &u)?;
        expect_eq("0+u", &tx_add::<T>(&tx_zero::<T>()?, &u)?, &u)
    });
    run(&mut r, s, "map preserves sums", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let f = sample::map(rng, &x, &y);
        let (u, v) = (sample::value::<T>(rng, &x), sample::value::<T>(rng, &x));
        let lhs = T::fmap(&f, &tx_add::<T>(&u, &v)?)?;
        expect_eq("T(f)(u+v)", &lhs, &tx_add::<T>(&T::fmap(&f, &u)?, &T::fmap(&f, &v)?)?)?;
        expect_eq("T(f)(0)", &T::fmap(&f, &tx_zero::<T>()?)?, &tx_zero::<T>()?)
    });
    run(&mut r, s, "multiply preserves sums", cases, |rng| {
        let outer = { let c = sample::carrier(rng, "x"); sample::embedded_carrier::<T>(rng, &c) };
        let (p, q) = (sample::value::<T>(rng, &outer), sample::value::<T>(rng, &outer));
        let lhs = T::mult(&tx_add::<T>(&p, &q)?)?;
        expect_eq("mu(P+Q)", &lhs, &tx_add::<T>(&T::mult(&p)?, &T::mult(&q)?)?)?;
        expect_eq("mu(0)", &T::mult(&tx_zero::<T>()?)?, &tx_zero::<T>()?)
    });
    r
}

/// `(σ × σ) ∘ bc = bc ∘ σ` for a monad map `σ: T₁ → T₂`.
pub fn bc_monad_map_law<T1: Monad, T2: Monad>(
    s: &Sampler,
    cases: usize,
    law: &str,
    sigma: impl Fn(&T1::Value) -> Result<T2::Value>,
) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, law, cases, |rng| {
        let xy = FiniteCarrier::sum(&sample::carrier(rng, "x"), &sample::carrier(rng, "y"));
        let w = sample::value::<T1>(rng, &xy);
        let (a, b) = bc::<T1>(&w)?;
        eq_pair("(s x s)(bc(w)) vs bc(s(w))", (sigma(&a)?, sigma(&b)?), bc::<T2>(&sigma(&w)?)?)
    });
    r
}

/// The six action laws of `⋆: T(1) × T(X) → T(X)`.
pub fn module_laws<T: AdditiveMonad + CommutativeMonad>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    let one = FiniteCarrier::one();
    let act = |a: &T::Value, u: &T::Value| scalar_action::<T>(a, u);
    run(&mut r, s, "action unit", cases, |rng| {
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("1*u", &act(&t1_unit::<T>(), &u)?, &u)
    });
    run(&mut r, s, "action associative", cases, |rng| {
        let (a, b) = (sample::value::<T>(rng, &one), sample::value::<T>(rng, &one));
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("(ab)*u vs a*(b*u)", &act(&t1_mul::<T>(&a, &b)?, &u)?, &act(&a, &act(&b, &u)?)?)
    });
    run(&mut r, s, "action distributes over vectors", cases, |rng| {
        let a = sample::value::<T>(rng, &one);
        let x = sample::carrier(rng, "x");
        let (u, v) = (sample::value::<T>(rng, &x), sample::value::<T>(rng, &x));
        expect_eq("a*(u+v)", &act(&a, &tx_add::<T>(&u, &v)?)?, &tx_add::<T>(&act(&a, &u)?, &act(&a, &v)?)?)
    });
    run(&mut r, s, "action distributes over scalars", cases, |rng| {
        let (a, b) = (sample::value::<T>(rng, &one), sample::value::<T>(rng, &one));
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("(a+b)*u", &act(&tx_add::<T>(&a, &b)?, &u)?, &tx_add::<T>(&act(&a, &u)?, &act(&b, &u)?)?)
    });
    run(&mut r, s, "zero scalar annihilates", cases, |rng| {
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("0*u", &act(&tx_zero::<T>()?, &u)?, &tx_zero::<T>()?)
    });
    run(&mut r, s, "zero vector is fixed", cases, |rng| {
        let a = sample::value::<T>(rng, &one);
        expect_eq("a*0", &act(&a, &tx_zero::<T>()?)?, &tx_zero::<T>()?)
    });
    r
}

fn at_one<S: Semiring>(s: S) -> Multiset<S> {
    Multiset::singleton(Elem::Star, s)
}

/// `E(M_S) ≅ S` via `φ ↦ φ(★)`, exhaustively over the pool of `S`, with
/// `E(M_S)`'s operations computed by the generic composites.
pub fn at_one_iso_laws<S: Semiring>() -> Result<LawReport> {
    type T<S> = MultisetMonad<S>;
    let desc: SemiringDescriptor<AtOne<T<S>>> = eval_at_one::<T<S>>();
    let pool: Vec<AtOne<T<S>>> = S::pool().into_iter().map(|s| AtOne(at_one(s))).collect();
    let mut r = check_semiring_laws(&desc, &pool)?.prefixed("E(T) semiring");
    let ps = pairs(&S::pool());
    r.check("E(T) = S: addition", ps.len(), |i| {
        let (a, b) = &ps[i];
        let sum = desc.add(&AtOne(at_one(a.clone())), &AtOne(at_one(b.clone())));
        expect_eq("(T(nabla) . bc_inv)(a, b)(star)", &sum.0.get(&Elem::Star), &(a.clone() + b.clone()))
    });
    r.check("E(T) = S: multiplication", ps.len(), |i| {
        let (a, b) = &ps[i];
        let product = t1_mul::<T<S>>(&at_one(a.clone()), &at_one(b.clone()))?;
        expect_eq("(mu . T(pi2) . st)(a, b)(star)", &product.get(&Elem::Star), &(a.clone() * b.clone()))
    });
    r.check("E(T) = S: units", 1, |_| {
        expect_eq("zero", &tx_zero::<T<S>>()?.get(&Elem::Star), &S::zero())?;
        expect_eq("one", &t1_unit::<T<S>>().get(&Elem::Star), &S::one())
    });
    let singles = S::pool();
    r.check("E(T) = S: bijection", singles.len(), |i| {
        let a = &singles[i];
        expect_eq("read(write(a))", &at_one(a.clone()).get(&Elem::Star), a)?;
        let phi = &<T<S> as Monad>::one_pool()[i];
        expect_eq("write(read(phi))", &at_one(phi.get(&Elem::Star)), phi)
    });
    Ok(r)
}

/// The star of `E(M_S)` is `ζ` and corresponds to the star of `S`.
pub fn at_one_star_laws<S: Involutive>() -> LawReport {
    let mut r = LawReport::new();
    let pool = S::pool();
    r.check("E(T) = S: star", pool.len(), |i| {
        let a = &pool[i];
        expect_eq("zeta({star: a})", &ms_involution(&at_one(a.clone())), &at_one(a.star()))
    });
    r
}

fn entries<S: Semiring>(m: &Multiset<S>) -> Vec<(Elem, S)> {
    m.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
}

fn pruned<S: Semiring>(acc: BTreeMap<Elem, S>) -> Vec<(Elem, S)> {
    acc.into_iter().filter(|(_, s)| !s.is_zero()).collect()
}

fn eq_entries<S: Semiring>(what: &str, got: &Multiset<S>, want: Vec<(Elem, S)>) -> CaseResult {
    expect(entries(got) == want, || {
        let want: Vec<String> = want.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        format!("{what}: {got} != {{{}}}", want.join(", "))
    })
}

/// Multiset operations against direct loops over their entries.
pub fn multiset_oracle_laws<S: Semiring>(s: &Sampler, cases: usize) -> LawReport {
    type T<S> = MultisetMonad<S>;
    let mut r = LawReport::new();
    run(&mut r, s, "fmap sums preimages", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let f = sample::map(rng, &x, &y);
        let phi = sample::value::<T<S>>(rng, &x);
        let mut acc = BTreeMap::new();
        for target in y.iter() {
            let mut total = S::zero();
            for source in x.iter() {
                if f.apply(source)? == *target {
                    total = total + phi.get(source);
                }
            }
            acc.insert(target.clone(), total);
        }
        eq_entries("T(f)(phi)", &ms_fmap(&f, &phi)?, pruned(acc))
    });
    run(&mut r, s, "multiply is the weighted sum", cases, |rng| {
        let p = { let c = sample::carrier(rng, "x"); sample::nested::<T<S>>(rng, &c) };
        let mut acc: BTreeMap<Elem, S> = BTreeMap::new();
        for (inner, weight) in p.iter() {
            for (x, t) in inner.downcast::<Multiset<S>>().expect("nested multisets").iter() {
                let e = acc.entry(x.clone()).or_insert_with(S::zero);
                *e = e.clone() + weight.clone() * t.clone();
            }
        }
        eq_entries("mu(P)", &ms_mult(&p)?, pruned(acc))
    });
    run(&mut r, s, "double strength multiplies pointwise", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let (phi, psi) = (sample::value::<T<S>>(rng, &x), sample::value::<T<S>>(rng, &y));
        let mut acc = BTreeMap::new();
        for a in x.iter() {
            for b in y.iter() {
                acc.insert(Elem::pair(a.clone(), b.clone()), phi.get(a) * psi.get(b));
            }
        }
        let want = pruned(acc);
        eq_entries("generic dst", &dst::<T<S>>(&phi, &psi)?, want.clone())?;
        eq_entries("ms_dst", &ms_dst(&phi, &psi), want)
    });
    run(&mut r, s, "sum is pointwise", cases, |rng| {
        let x = sample::carrier(rng, "x");
        let (phi, psi) = (sample::value::<T<S>>(rng, &x), sample::value::<T<S>>(rng, &x));
        let acc = x.iter().map(|a| (a.clone(), phi.get(a) + psi.get(a))).collect();
        eq_entries("T(nabla)(bc_inv(phi, psi))", &tx_add::<T<S>>(&phi, &psi)?, pruned(acc))
    });
    run(&mut r, s, "action scales multiplicities", cases, |rng| {
        let a = sample::scalar::<S>(rng);
        let x = sample::carrier(rng, "x");
        let phi = sample::value::<T<S>>(rng, &x);
        let acc = x.iter().map(|e| (e.clone(), a.clone() * phi.get(e))).collect();
        eq_entries("a * phi", &scalar_action::<T<S>>(&at_one(a.clone()), &phi)?, pruned(acc))
    });
    r
}

/// `ζ` is an involutive monad map.
pub fn involution_laws<T: InvolutiveMonad>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, "involution is involutive", cases, |rng| {
        let u = { let c = sample::carrier(rng, "x"); sample::value::<T>(rng, &c) };
        expect_eq("zeta(zeta(u))", &T::involution(&T::involution(&u)), &u)
    });
    run(&mut r, s, "involution commutes with unit", cases, |rng| {
        let x0 = { let c = sample::carrier(rng, "x"); pick(rng, &c) };
        expect_eq("zeta(eta(x))", &T::involution(&T::unit(x0.clone())), &T::unit(x0))
    });
    run(&mut r, s, "involution commutes with multiply", cases, |rng| {
        let p = { let c = sample::carrier(rng, "x"); sample::nested::<T>(rng, &c) };
        let inner = map_with::<T>(&p, |e| Ok(T::embed(T::involution(&T::extract(e)?))))?;
        expect_eq("zeta(mu(P)) vs mu(zeta(T(zeta)(P)))", &T::involution(&T::mult(&p)?), &T::mult(&T::involution(&inner))?)
    });
    run(&mut r, s, "involution natural", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let f = sample::map(rng, &x, &y);
        let u = sample::value::<T>(rng, &x);
        expect_eq("zeta(T(f)(u))", &T::involution(&T::fmap(&f, &u)?), &T::fmap(&f, &T::involution(&u))?)
    });
    r
}

fn naive_compose<S: Semiring>(g: &Matrix<S>, h: &Matrix<S>) -> Vec<S> {
    let (n, m, p) = (g.rows(), g.cols(), h.cols());
    let (ge, he) = (g.entries(), h.entries());
    let mut out = Vec::with_capacity(n * p);
    for i in 0..n {
        for k in 0..p {
            let mut acc = S::zero();
            for j in 0..m {
                acc = acc + ge[i * m + j].clone() * he[j * p + k].clone();
            }
            out.push(acc);
        }
    }
    out
}

/// Category, biproduct and tensor laws of `Mat(S)`.
pub fn matcat_laws<S: Semiring>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    let d = sample::dim;
    let m = |rng: &mut ChaCha8Rng, a, b| sample::matrix::<S>(rng, a, b);
    run(&mut r, s, "compose associative", cases, |rng| {
        let (a, b, c, e) = (d(rng), d(rng), d(rng), d(rng));
        let (f, g, h) = (m(rng, a, b), m(rng, b, c), m(rng, c, e));
        expect_eq("h.(g.f) vs (h.g).f", &f.compose(&g)?.compose(&h)?, &f.compose(&g.compose(&h)?)?)
    });
    run(&mut r, s, "compose identities", cases, |rng| {
        let f = sample::any_matrix::<S>(rng);
        expect_eq("f.id", &Matrix::identity(f.rows()).compose(&f)?, &f)?;
        expect_eq("id.f", &f.compose(&Matrix::identity(f.cols()))?, &f)
    });
    run(&mut r, s, "compose matches the triple loop", cases, |rng| {
        let (a, b, c) = (d(rng), d(rng), d(rng));
        let (g, h) = (m(rng, a, b), m(rng, b, c));
        expect_eq("h.g", &g.compose(&h)?, &Matrix::new(a, c, naive_compose(&g, &h))?)
    });
    run(&mut r, s, "projections after coprojections", cases, |rng| {
        let (a, b) = (d(rng), d(rng));
        expect_eq("pi1.k1", &Matrix::<S>::coproj1(a, b).compose(&Matrix::proj1(a, b))?, &Matrix::identity(a))?;
        expect_eq("pi2.k1", &Matrix::<S>::coproj1(a, b).compose(&Matrix::proj2(a, b))?, &Matrix::zero(a, b))?;
        expect_eq("pi1.k2", &Matrix::<S>::coproj2(a, b).compose(&Matrix::proj1(a, b))?, &Matrix::zero(b, a))?;
        expect_eq("pi2.k2", &Matrix::<S>::coproj2(a, b).compose(&Matrix::proj2(a, b))?, &Matrix::identity(b))
    });
    run(&mut r, s, "coprojections and projections sum to the identity", cases, |rng| {
        let (a, b) = (d(rng), d(rng));
        let left = Matrix::<S>::proj1(a, b).compose(&Matrix::coproj1(a, b))?;
        let right = Matrix::<S>::proj2(a, b).compose(&Matrix::coproj2(a, b))?;
        expect_eq("k1.pi1 + k2.pi2", &Matrix::homset_add(&left, &right)?, &Matrix::identity(a + b))
    });
    run(&mut r, s, "cotuple universal", cases, |rng| {
        let (a, b, c) = (d(rng), d(rng), d(rng));
        let (f, g) = (m(rng, a, c), m(rng, b, c));
        let h = Matrix::cotuple(&f, &g)?;
        expect_eq("[f,g].k1", &Matrix::coproj1(a, b).compose(&h)?, &f)?;
        expect_eq("[f,g].k2", &Matrix::coproj2(a, b).compose(&h)?, &g)
    });
    run(&mut r, s, "tuple universal", cases, |rng| {
        let (a, b, c) = (d(rng), d(rng), d(rng));
        let (f, g) = (m(rng, c, a), m(rng, c, b));
        let h = Matrix::tuple(&f, &g)?;
        expect_eq("pi1.<f,g>", &h.compose(&Matrix::proj1(a, b))?, &f)?;
        expect_eq("pi2.<f,g>", &h.compose(&Matrix::proj2(a, b))?, &g)
    });
    run(&mut r, s, "tensor functorial", cases, |rng| {
        let (a, b, c) = (d(rng), d(rng), d(rng));
        let (a2, b2, c2) = (d(rng), d(rng), d(rng));
        let (f, g) = (m(rng, a, b), m(rng, b, c));
        let (f2, g2) = (m(rng, a2, b2), m(rng, b2, c2));
        let lhs = Matrix::tensor(&f.compose(&g)?, &f2.compose(&g2)?);
        let rhs = Matrix::tensor(&f, &f2).compose(&Matrix::tensor(&g, &g2))?;
        expect_eq("(g.f)x(g'.f') vs (gxg').(fxf')", &lhs, &rhs)?;
        expect_eq("id x id", &Matrix::<S>::tensor(&Matrix::identity(a), &Matrix::identity(a2)), &Matrix::identity(a * a2))
    });
    run(&mut r, s, "tensor associative", cases, |rng| {
        let (f, g, h) = (sample::any_matrix::<S>(rng), sample::any_matrix::<S>(rng), sample::any_matrix::<S>(rng));
        expect_eq("(fxg)xh vs fx(gxh)", &Matrix::tensor(&Matrix::tensor(&f, &g), &h), &Matrix::tensor(&f, &Matrix::tensor(&g, &h)))
    });
    run(&mut r, s, "tensor distributes over sums", cases, |rng| {
        let (a, b, c, e) = (d(rng), d(rng), d(rng), d(rng));
        let (f, g, h) = (m(rng, a, b), m(rng, c, e), m(rng, c, e));
        let lhs = Matrix::tensor(&f, &Matrix::homset_add(&g, &h)?);
        expect_eq("fx(g+h)", &lhs, &Matrix::homset_add(&Matrix::tensor(&f, &g), &Matrix::tensor(&f, &h))?)?;
        expect_eq("fx0", &Matrix::tensor(&f, &Matrix::zero(c, e)), &Matrix::zero(a * c, b * e))
    });
    run(&mut r, s, "tensor distributes over direct sums", cases, |rng| {
        let mut small = || rng.gen_range(0..=2);
        let (a, b, c, e, p, q) = (small(), small(), small(), small(), small(), small());
        let (f, g, h) = (m(rng, a, b), m(rng, c, e), m(rng, p, q));
        let lhs = Matrix::tensor(&f, &Matrix::direct_sum(&g, &h));
        let rhs = Matrix::direct_sum(&Matrix::tensor(&f, &g), &Matrix::tensor(&f, &h));
        // Both sides agree once the interleaved coordinates are reordered.
        let reorder = |blocks: usize, first: usize, second: usize| {
            Aleph0Map::from_fn(blocks * (first + second), blocks * first + blocks * second, |c| {
                let (i, j) = (c / (first + second), c % (first + second));
                if j < first {
                    i * first + j
                } else {
                    blocks * first + i * second + (j - first)
                }
            })
        };
        let into = reorder(a, c, p)?.embed::<S>();
        let out = reorder(b, e, q)?.embed::<S>();
        expect_eq("fx(g+h) vs (fxg)+(fxh)", &into.compose(&rhs)?, &lhs.compose(&out)?)
    });
    run(&mut r, s, "tensor symmetry natural", cases, |rng| {
        let (a, b, c, e) = (d(rng), d(rng), d(rng), d(rng));
        let (f, g) = (m(rng, a, b), m(rng, c, e));
        let lhs = Matrix::tensor(&f, &g).compose(&Aleph0Map::tensor_swap(b, e).embed())?;
        let rhs = Aleph0Map::tensor_swap(a, c).embed().compose(&Matrix::tensor(&g, &f))?;
        expect_eq("swap.(fxg) vs (gxf).swap", &lhs, &rhs)
    });
    run(&mut r, s, "sum symmetry natural", cases, |rng| {
        let (a, b, c, e) = (d(rng), d(rng), d(rng), d(rng));
        let (f, g) = (m(rng, a, b), m(rng, c, e));
        let lhs = Matrix::direct_sum(&f, &g).compose(&Aleph0Map::sum_swap(b, e).embed())?;
        let rhs = Aleph0Map::sum_swap(a, c).embed().compose(&Matrix::direct_sum(&g, &f))?;
        expect_eq("swap.(f+g) vs (g+f).swap", &lhs, &rhs)
    });
    r
}

/// `H(Mat(S)) ≅ S` via `[s] ↦ s`, exhaustively over the pool.
pub fn homset_iso_laws<S: Semiring>() -> Result<LawReport> {
    let pool: Vec<HomOne<S>> = S::pool().into_iter().map(HomOne::of).collect();
    let mut r = check_semiring_laws(&homset_semiring::<S>(), &pool)?.prefixed("H(Mat) semiring");
    let ps = pairs(&S::pool());
    r.check("H(Mat) = S: addition", ps.len(), |i| {
        let (a, b) = &ps[i];
        expect_eq("[a]+[b]", (HomOne::of(a.clone()) + HomOne::of(b.clone())).scalar(), &(a.clone() + b.clone()))
    });
    r.check("H(Mat) = S: multiplication", ps.len(), |i| {
        let (a, b) = &ps[i];
        expect_eq("[a].[b]", (HomOne::of(a.clone()) * HomOne::of(b.clone())).scalar(), &(a.clone() * b.clone()))
    });
    r.check("H(Mat) = S: units", 1, |_| {
        expect_eq("zero", <HomOne<S> as num_traits::Zero>::zero().scalar(), &S::zero())?;
        expect_eq("one", <HomOne<S> as num_traits::One>::one().scalar(), &S::one())
    });
    Ok(r)
}

/// The star of `H(Mat(S))` is the dagger and corresponds to the star of `S`.
pub fn homset_star_laws<S: Involutive>() -> LawReport {
    let mut r = LawReport::new();
    let pool = S::pool();
    r.check("H(Mat) = S: star", pool.len(), |i| {
        let a = &pool[i];
        expect_eq("[a] dagger", HomOne::of(a.clone()).star().scalar(), &a.star())
    });
    r
}

/// Dagger laws on random `3 × 3` matrices.
pub fn dagger_laws<S: Involutive>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    let m = |rng: &mut ChaCha8Rng| sample::matrix::<S>(rng, 3, 3);
    run(&mut r, s, "dagger involutive", cases, |rng| {
        let f = m(rng);
        expect_eq("f dagger dagger", &f.dagger().dagger(), &f)
    });
    run(&mut r, s, "dagger reverses composition", cases, |rng| {
        let (g, h) = (m(rng), m(rng));
        expect_eq("(h.g) dagger", &g.compose(&h)?.dagger(), &h.dagger().compose(&g.dagger())?)
    });
    run(&mut r, s, "dagger preserves tensor", cases, |rng| {
        let (f, g) = (m(rng), m(rng));
        expect_eq("(fxg) dagger", &Matrix::tensor(&f, &g).dagger(), &Matrix::tensor(&f.dagger(), &g.dagger()))
    });
    run(&mut r, s, "coprojections are daggers of projections", cases, |rng| {
        let (a, b) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        expect_eq("pi1 dagger", &Matrix::<S>::proj1(a, b).dagger(), &Matrix::coproj1(a, b))?;
        expect_eq("pi2 dagger", &Matrix::<S>::proj2(a, b).dagger(), &Matrix::coproj2(a, b))
    });
    run(&mut r, s, "dagger preserves identities and sums", cases, |rng| {
        let (f, g) = (m(rng), m(rng));
        expect_eq("id dagger", &Matrix::<S>::identity(3).dagger(), &Matrix::identity(3))?;
        expect_eq("(f+g) dagger", &Matrix::homset_add(&f, &g)?.dagger(), &Matrix::homset_add(&f.dagger(), &g.dagger())?)
    });
    r
}

fn term<S: Semiring>(rng: &mut ChaCha8Rng, carrier: &FiniteCarrier) -> FreeTerm<S> {
    FreeTerm::random(rng, carrier, sample::MAX_DIM)
}

/// Soundness of the normal form and agreement of `T_{Mat(S)}` with `M_S`.
pub fn freetheory_laws<S: Semiring>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, "normal form respects the relation", cases, |rng| {
        let i = sample::dim(rng);
        let m = if i == 0 { sample::dim(rng) } else { rng.gen_range(1..=sample::MAX_DIM) };
        let f = sample::aleph0(rng, i, m);
        let g = sample::matrix::<S>(rng, 1, i);
        let x = sample::carrier(rng, "x");
        let v: Vec<Elem> = (0..m).map(|_| pick(rng, &x)).collect();
        expect(tl_relation_check(&f, &g, &v)?, || format!("f = {f}, g = {g}, v = {v:?}"))
    });
    run(&mut r, s, "normal form sums coefficients", cases, |rng| {
        let t = { let c = sample::carrier(rng, "x"); term::<S>(rng, &c) };
        let mut acc: BTreeMap<Elem, S> = BTreeMap::new();
        for (a, x) in t.elems().iter().enumerate() {
            let e = acc.entry(x.clone()).or_insert_with(S::zero);
            *e = e.clone() + t.coefficients().get(0, a).clone();
        }
        eq_entries(&format!("normalize({t})"), &t.normalize()?, pruned(acc))
    });
    run(&mut r, s, "normal form of unit", cases, |rng| {
        let x0 = { let c = sample::carrier(rng, "x"); pick(rng, &c) };
        expect_eq("normalize(k_1([1]; x))", &tl_unit::<S>(x0.clone()).normalize()?, &ms_unit(x0))
    });
    run(&mut r, s, "normal form of multiply", cases, |rng| {
        let x = sample::carrier(rng, "x");
        let k = rng.gen_range(1..=3);
        let inner = FiniteCarrier::new((0..k).map(|_| Elem::val(term::<S>(rng, &x))));
        let outer = term::<S>(rng, &inner);
        let lhs = tl_mult(&outer)?.normalize()?;
        let normalize_inside = CarrierMap::try_from_fn(&inner, |e| {
            Ok(Elem::val(e.downcast::<FreeTerm<S>>().expect("embedded terms").normalize()?))
        })?;
        let rhs = ms_mult(&ms_fmap(&normalize_inside, &outer.normalize()?)?)?;
        expect_eq(&format!("normalize(mult({outer}))"), &lhs, &rhs)
    });
    run(&mut r, s, "normal form natural", cases, |rng| {
        let (x, y) = (sample::carrier(rng, "x"), sample::carrier(rng, "y"));
        let f = sample::map(rng, &x, &y);
        let t = term::<S>(rng, &x);
        let mapped = FreeTerm::new(
            t.coefficients().clone(),
            t.elems().iter().map(|e| f.apply(e)).collect::<Result<Vec<_>>>()?,
        )?;
        expect_eq("normalize(T(f)(t))", &mapped.normalize()?, &ms_fmap(&f, &t.normalize()?)?)
    });
    run(&mut r, s, "term sums commute up to normal form", cases, |rng| {
        let x = sample::carrier(rng, "x");
        let (t, u) = (term::<S>(rng, &x), term::<S>(rng, &x));
        let (tu, ut) = (tx_add::<FreeTheory<S>>(&t, &u)?, tx_add::<FreeTheory<S>>(&u, &t)?);
        expect_eq("normalize(t+u) vs normalize(u+t)", &tu.normalize()?, &ut.normalize()?)?;
        expect_eq("normalize(t+u)", &tu.normalize()?, &tx_add::<MultisetMonad<S>>(&t.normalize()?, &u.normalize()?)?)
    });
    run(&mut r, s, "term bc inverse up to normal form", cases, |rng| {
        let xy = FiniteCarrier::sum(&sample::carrier(rng, "x"), &sample::carrier(rng, "y"));
        let w = term::<S>(rng, &xy);
        let (a, b) = bc::<FreeTheory<S>>(&w)?;
        let back = FreeTheory::<S>::bc_inv(&a, &b);
        expect_eq("normalize(bc_inv(bc(w)))", &back.normalize()?, &w.normalize()?)?;
        let (p, q) = bc::<MultisetMonad<S>>(&w.normalize()?)?;
        eq_pair("normalize(bc(w)) vs bc(normalize(w))", (a.normalize()?, b.normalize()?), (p, q))
    });
    run(&mut r, s, "unit functor preserves composition", cases, |rng| {
        let (a, b, c) = (sample::dim(rng), sample::dim(rng), sample::dim(rng));
        let (f, g) = (sample::matrix::<S>(rng, a, b), sample::matrix::<S>(rng, b, c));
        let lhs = law_unit_functor(&f.compose(&g)?)?;
        expect_eq("F(g.f) vs F(g) o F(f)", &lhs, &law_unit_functor(&f)?.compose(&law_unit_functor(&g)?)?)
    });
    run(&mut r, s, "unit functor preserves identities and coprojections", cases, |rng| {
        let (a, b) = (sample::dim(rng), sample::dim(rng));
        expect_eq("F(id)", &law_unit_functor(&Matrix::<S>::identity(a))?, &KleisliMap::identity(a))?;
        expect_eq("F(k1)", &law_unit_functor(&Matrix::<S>::coproj1(a, b))?, &KleisliMap::coproj1(a, b))?;
        expect_eq("F(k2)", &law_unit_functor(&Matrix::<S>::coproj2(a, b))?, &KleisliMap::coproj2(a, b))
    });
    r
}

/// `normalize ∘ ζ = ζ ∘ normalize`.
pub fn freetheory_involution_laws<S: Involutive>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, "normal form of involution", cases, |rng| {
        let t = { let c = sample::carrier(rng, "x"); term::<S>(rng, &c) };
        expect_eq("normalize(zeta(t))", &tl_involution(&t).normalize()?, &ms_involution(&t.normalize()?))?;
        expect_eq("zeta(zeta(t))", &tl_involution(&tl_involution(&t)), &t)
    });
    r
}

fn kl_dim(rng: &mut ChaCha8Rng, allow_zero: bool) -> usize {
    rng.gen_range(if allow_zero { 0 } else { 1 }..=3)
}

/// `Kl_ℕ(T)` is a category with coproducts.
pub fn kleisli_category_laws<T: Monad>(s: &Sampler, cases: usize, allow_zero: bool) -> LawReport {
    let mut r = LawReport::new();
    let k = |rng: &mut ChaCha8Rng, n, m| KleisliMap::<T>::random(rng, n, m, 3);
    run(&mut r, s, "kleisli compose associative", cases, |rng| {
        let (a, b, c, d) = (kl_dim(rng, allow_zero), kl_dim(rng, allow_zero), kl_dim(rng, allow_zero), kl_dim(rng, allow_zero));
        let (f, g, h) = (k(rng, a, b)?, k(rng, b, c)?, k(rng, c, d)?);
        expect_eq("h o (g o f) vs (h o g) o f", &f.compose(&g)?.compose(&h)?, &f.compose(&g.compose(&h)?)?)
    });
    run(&mut r, s, "kleisli identities", cases, |rng| {
        let f = rand_kl::<T>(rng, allow_zero)?;
        expect_eq("f o id", &KleisliMap::identity(f.dom()).compose(&f)?, &f)?;
        expect_eq("id o f", &f.compose(&KleisliMap::identity(f.cod()))?, &f)
    });
    run(&mut r, s, "kleisli cotuple universal", cases, |rng| {
        let (a, b, c) = (kl_dim(rng, allow_zero), kl_dim(rng, allow_zero), kl_dim(rng, allow_zero));
        let (f, g) = (k(rng, a, c)?, k(rng, b, c)?);
        let h = KleisliMap::cotuple(&f, &g)?;
        expect_eq("[f,g] o k1", &KleisliMap::coproj1(a, b).compose(&h)?, &f)?;
        expect_eq("[f,g] o k2", &KleisliMap::coproj2(a, b).compose(&h)?, &g)
    });
    r
}

/// Biproduct equations of `Kl_ℕ(T)` for additive `T`.
pub fn kleisli_biproduct_laws<T: AdditiveMonad>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    let k = |rng: &mut ChaCha8Rng, n, m| KleisliMap::<T>::random(rng, n, m, 3);
    run(&mut r, s, "kleisli projections after coprojections", cases, |rng| {
        let (a, b) = (kl_dim(rng, true), kl_dim(rng, true));
        let (p1, p2) = (KleisliMap::<T>::proj1(a, b)?, KleisliMap::<T>::proj2(a, b)?);
        expect_eq("p1 o k1", &KleisliMap::coproj1(a, b).compose(&p1)?, &KleisliMap::identity(a))?;
        expect_eq("p2 o k1", &KleisliMap::coproj1(a, b).compose(&p2)?, &KleisliMap::zero(a, b)?)?;
        expect_eq("p1 o k2", &KleisliMap::coproj2(a, b).compose(&p1)?, &KleisliMap::zero(b, a)?)?;
        expect_eq("p2 o k2", &KleisliMap::coproj2(a, b).compose(&p2)?, &KleisliMap::identity(b))
    });
    run(&mut r, s, "kleisli tuple universal", cases, |rng| {
        let (a, b, c) = (kl_dim(rng, true), kl_dim(rng, true), kl_dim(rng, true));
        let (f, g) = (k(rng, c, a)?, k(rng, c, b)?);
        let h = KleisliMap::tuple(&f, &g)?;
        expect_eq("p1 o <f,g>", &h.compose(&KleisliMap::proj1(a, b)?)?, &f)?;
        expect_eq("p2 o <f,g>", &h.compose(&KleisliMap::proj2(a, b)?)?, &g)
    });
    run(&mut r, s, "kleisli homset sum is pointwise", cases, |rng| {
        let (a, b) = (kl_dim(rng, true), kl_dim(rng, true));
        let (f, g) = (k(rng, a, b)?, k(rng, a, b)?);
        expect_eq("nabla o (f+g) o delta", &KleisliMap::homset_add(&f, &g)?, &KleisliMap::pointwise_add(&f, &g)?)
    });
    run(&mut r, s, "kleisli zero absorbs", cases, |rng| {
        let (a, b, c) = (kl_dim(rng, true), kl_dim(rng, true), kl_dim(rng, true));
        let f = k(rng, a, b)?;
        expect_eq("0 o f", &f.compose(&KleisliMap::zero(b, c)?)?, &KleisliMap::zero(a, c)?)
    });
    r
}

/// `θ` and `ξ` for `M_S`: inverse, and `θ` preserves the structure.
pub fn kleisli_iso_laws<S: Semiring>(s: &Sampler, cases: usize) -> LawReport {
    type T<S> = MultisetMonad<S>;
    type E<S> = AtOne<MultisetMonad<S>>;
    let mut r = LawReport::new();
    let lift = |h: &Matrix<S>| h.map(|a| AtOne::<T<S>>(at_one(a.clone())));
    let k = |rng: &mut ChaCha8Rng, n, m| KleisliMap::<T<S>>::random(rng, n, m, 3);
    let d = |rng: &mut ChaCha8Rng| kl_dim(rng, true);
    run(&mut r, s, "theta after xi", cases, |rng| {
        let h = lift(&sample::any_matrix::<S>(rng));
        expect_eq("theta(xi(h))", &theta(&xi(&h)?)?, &h)
    });
    run(&mut r, s, "xi after theta", cases, |rng| {
        let f = rand_kl::<T<S>>(rng, true)?;
        expect_eq("xi(theta(f))", &xi(&theta(&f)?)?, &f)
    });
    run(&mut r, s, "theta preserves composition", cases, |rng| {
        let (a, b, c) = (d(rng), d(rng), d(rng));
        let (f, g) = (k(rng, a, b)?, k(rng, b, c)?);
        expect_eq("theta(g o f)", &theta(&f.compose(&g)?)?, &theta(&f)?.compose(&theta(&g)?)?)
    });
    run(&mut r, s, "theta preserves identities and biproduct maps", cases, |rng| {
        let (a, b) = (d(rng), d(rng));
        expect_eq("theta(id)", &theta(&KleisliMap::<T<S>>::identity(a))?, &Matrix::<E<S>>::identity(a))?;
        expect_eq("theta(k1)", &theta(&KleisliMap::<T<S>>::coproj1(a, b))?, &Matrix::<E<S>>::coproj1(a, b))?;
        expect_eq("theta(k2)", &theta(&KleisliMap::<T<S>>::coproj2(a, b))?, &Matrix::<E<S>>::coproj2(a, b))?;
        expect_eq("theta(p1)", &theta(&KleisliMap::<T<S>>::proj1(a, b)?)?, &Matrix::<E<S>>::proj1(a, b))?;
        expect_eq("theta(p2)", &theta(&KleisliMap::<T<S>>::proj2(a, b)?)?, &Matrix::<E<S>>::proj2(a, b))?;
        expect_eq("theta(0)", &theta(&KleisliMap::<T<S>>::zero(a, b)?)?, &Matrix::<E<S>>::zero(a, b))
    });
    run(&mut r, s, "theta preserves tuples and cotuples", cases, |rng| {
        let (a, b, c) = (d(rng), d(rng), d(rng));
        let (f, g) = (k(rng, c, a)?, k(rng, c, b)?);
        expect_eq("theta(<f,g>)", &theta(&KleisliMap::tuple(&f, &g)?)?, &Matrix::tuple(&theta(&f)?, &theta(&g)?)?)?;
        let (f, g) = (k(rng, a, c)?, k(rng, b, c)?);
        expect_eq("theta([f,g])", &theta(&KleisliMap::cotuple(&f, &g)?)?, &Matrix::cotuple(&theta(&f)?, &theta(&g)?)?)
    });
    run(&mut r, s, "theta preserves tensor", cases, |rng| {
        let (f, g) = (rand_kl::<T<S>>(rng, true)?, rand_kl::<T<S>>(rng, true)?);
        expect_eq("theta(f x g)", &theta(&KleisliMap::tensor(&f, &g)?)?, &Matrix::tensor(&theta(&f)?, &theta(&g)?))
    });
    run(&mut r, s, "theta preserves sums", cases, |rng| {
        let (a, b) = (d(rng), d(rng));
        let (f, g) = (k(rng, a, b)?, k(rng, a, b)?);
        expect_eq("theta(f+g)", &theta(&KleisliMap::homset_add(&f, &g)?)?, &Matrix::homset_add(&theta(&f)?, &theta(&g)?)?)
    });
    let ps = pairs(&S::pool());
    let endo = |a: &S| KleisliMap::<T<S>>::new(1, vec![Multiset::singleton(Elem::Idx(0), a.clone())]);
    let at_star = |f: &KleisliMap<T<S>>| map_with::<T<S>>(f.component(0), |_| Ok(Elem::Star));
    r.check("kleisli endomaps of one = E(T)", ps.len(), |i| {
        let (a, b) = &ps[i];
        let (fa, fb) = (endo(a)?, endo(b)?);
        let (ea, eb) = (at_one(a.clone()), at_one(b.clone()));
        expect_eq("composition", &at_star(&fa.compose(&fb)?)?, &t1_mul::<T<S>>(&eb, &ea)?)?;
        expect_eq("sum", &at_star(&KleisliMap::homset_add(&fa, &fb)?)?, &tx_add::<T<S>>(&ea, &eb)?)
    });
    r
}

/// `θ` carries the Kleisli dagger induced by `ζ` to the matrix dagger.
pub fn kleisli_dagger_laws<S: Involutive>(s: &Sampler, cases: usize) -> LawReport {
    let mut r = LawReport::new();
    run(&mut r, s, "theta preserves dagger", cases, |rng| {
        let f = rand_kl::<MultisetMonad<S>>(rng, true)?;
        expect_eq("theta(f dagger)", &theta(&kl_dagger(&f)?)?, &theta(&f)?.dagger())
    });
    r
}

fn rand_kl<T: Monad>(rng: &mut ChaCha8Rng, allow_zero: bool) -> Result<KleisliMap<T>> {
    let (a, b) = (kl_dim(rng, allow_zero), kl_dim(rng, allow_zero));
    KleisliMap::random(rng, a, b, 3)
}
