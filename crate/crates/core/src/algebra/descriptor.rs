//! Operation tables for semirings and monoids, and sample-based law checks.
//!
//! Descriptors decouple the laws from any Rust trait so that deliberately
//! broken structures can be checked too.

use std::fmt::{self, Debug, Display};
use std::sync::Arc;

use super::traits::{Involutive, Monoid, Semiring};
use crate::error::{Error, Result};
use crate::report::{expect_eq, LawReport};

pub type BinOp<C> = Arc<dyn Fn(&C, &C) -> C + Send + Sync>;
pub type UnOp<C> = Arc<dyn Fn(&C) -> C + Send + Sync>;
pub type Membership<C> = Arc<dyn Fn(&C) -> std::result::Result<(), String> + Send + Sync>;

/// A named commutative semiring given by its operation table.
#[derive(Clone)]
pub struct SemiringDescriptor<C> {
    pub name: String,
    pub add: BinOp<C>,
    pub zero: C,
    pub mul: BinOp<C>,
    pub one: C,
    pub star: Option<UnOp<C>>,
    /// Rejects values that do not carry this descriptor's tag.
    pub member: Membership<C>,
}

impl<C: Debug> Debug for SemiringDescriptor<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemiringDescriptor")
            .field("name", &self.name)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .field("involutive", &self.star.is_some())
            .finish()
    }
}

impl<C: 'static> SemiringDescriptor<C> {
    pub fn new(
        name: impl Into<String>,
        add: impl Fn(&C, &C) -> C + Send + Sync + 'static,
        zero: C,
        mul: impl Fn(&C, &C) -> C + Send + Sync + 'static,
        one: C,
    ) -> Self {
        SemiringDescriptor {
            name: name.into(),
            add: Arc::new(add),
            zero,
            mul: Arc::new(mul),
            one,
            star: None,
            member: Arc::new(|_| Ok(())),
        }
    }

    pub fn with_star(mut self, star: impl Fn(&C) -> C + Send + Sync + 'static) -> Self {
        self.star = Some(Arc::new(star));
        self
    }

    pub fn with_membership(
        mut self,
        member: impl Fn(&C) -> std::result::Result<(), String> + Send + Sync + 'static,
    ) -> Self {
        self.member = Arc::new(member);
        self
    }

    pub fn add(&self, a: &C, b: &C) -> C {
        (self.add)(a, b)
    }

    pub fn mul(&self, a: &C, b: &C) -> C {
        (self.mul)(a, b)
    }
}

impl<S: Semiring> SemiringDescriptor<S> {
    /// The operation table of a built-in semiring, without involution.
    pub fn of() -> Self {
        SemiringDescriptor::new(S::name(), |a: &S, b: &S| a.clone() + b.clone(), S::zero(), |a: &S, b: &S| a.clone() * b.clone(), S::one())
    }
}

impl<S: Involutive> SemiringDescriptor<S> {
    pub fn of_involutive() -> Self {
        Self::of().with_star(S::star)
    }
}

/// A named monoid given by its operation table.
#[derive(Clone)]
pub struct MonoidDescriptor<C> {
    pub name: String,
    pub op: BinOp<C>,
    pub unit: C,
    pub commutative: bool,
    pub member: Membership<C>,
}

impl<C: 'static> MonoidDescriptor<C> {
    pub fn new(
        name: impl Into<String>,
        op: impl Fn(&C, &C) -> C + Send + Sync + 'static,
        unit: C,
        commutative: bool,
    ) -> Self {
        MonoidDescriptor {
            name: name.into(),
            op: Arc::new(op),
            unit,
            commutative,
            member: Arc::new(|_| Ok(())),
        }
    }

    pub fn with_membership(
        mut self,
        member: impl Fn(&C) -> std::result::Result<(), String> + Send + Sync + 'static,
    ) -> Self {
        self.member = Arc::new(member);
        self
    }
}

impl<M: Monoid> MonoidDescriptor<M> {
    pub fn of() -> Self {
        MonoidDescriptor::new(M::name(), M::op, M::unit(), M::commutative())
    }
}

fn check_members<C>(member: &Membership<C>, samples: &[C]) -> Result<()> {
    for s in samples {
        member(s).map_err(|found| Error::TagMismatch {
            expected: "descriptor tag".into(),
            found,
        })?;
    }
    Ok(())
}

fn pairs<C: Clone>(samples: &[C]) -> Vec<(C, C)> {
    samples
        .iter()
        .flat_map(|a| samples.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn triples<C: Clone>(samples: &[C]) -> Vec<(C, C, C)> {
    pairs(samples)
        .into_iter()
        .flat_map(|(a, b)| samples.iter().map(move |c| (a.clone(), b.clone(), c.clone())))
        .collect()
}

/// Checks every semiring law (and the involution laws when a star is present)
/// exhaustively over `samples`.
pub fn check_semiring_laws<C>(desc: &SemiringDescriptor<C>, samples: &[C]) -> Result<LawReport>
where
    C: Clone + PartialEq + Display + 'static,
{
    check_members(&desc.member, samples)?;
    let d = desc;
    let p = pairs(samples);
    let t = triples(samples);
    let mut r = LawReport::new();
    r.check("add commutative", p.len(), |k| {
        let (s, u) = &p[k];
        expect_eq(&format!("{s}+{u} vs {u}+{s}"), &d.add(s, u), &d.add(u, s))
    });
    r.check("add associative", t.len(), |k| {
        let (s, u, v) = &t[k];
        expect_eq(&format!("({s}+{u})+{v} vs {s}+({u}+{v})"), &d.add(&d.add(s, u), v), &d.add(s, &d.add(u, v)))
    });
    r.check("add unit", samples.len(), |k| {
        let s = &samples[k];
        expect_eq(&format!("{s}+0"), &d.add(s, &d.zero), s)
    });
    r.check("mul commutative", p.len(), |k| {
        let (s, u) = &p[k];
        expect_eq(&format!("{s}*{u} vs {u}*{s}"), &d.mul(s, u), &d.mul(u, s))
    });
    r.check("mul associative", t.len(), |k| {
        let (s, u, v) = &t[k];
        expect_eq(&format!("({s}*{u})*{v} vs {s}*({u}*{v})"), &d.mul(&d.mul(s, u), v), &d.mul(s, &d.mul(u, v)))
    });
    r.check("mul unit", samples.len(), |k| {
        let s = &samples[k];
        expect_eq(&format!("{s}*1"), &d.mul(s, &d.one), s)
    });
    r.check("zero annihilates", samples.len(), |k| {
        let s = &samples[k];
        expect_eq(&format!("{s}*0"), &d.mul(s, &d.zero), &d.zero)
    });
    r.check("distributive", t.len(), |k| {
        let (s, u, v) = &t[k];
        expect_eq(
            &format!("{s}*({u}+{v}) vs {s}*{u}+{s}*{v}"),
            &d.mul(s, &d.add(u, v)),
            &d.add(&d.mul(s, u), &d.mul(s, v)),
        )
    });
    if let Some(star) = &d.star {
        r.check("star preserves add", p.len(), |k| {
            let (s, u) = &p[k];
            expect_eq(&format!("({s}+{u})*"), &star(&d.add(s, u)), &d.add(&star(s), &star(u)))
        });
        r.check("star preserves mul", p.len(), |k| {
            let (s, u) = &p[k];
            expect_eq(&format!("({s}*{u})*"), &star(&d.mul(s, u)), &d.mul(&star(s), &star(u)))
        });
        r.check("star involutive", samples.len(), |k| {
            let s = &samples[k];
            expect_eq(&format!("{s}**"), &star(&star(s)), s)
        });
        r.check("star preserves zero", 1, |_| expect_eq("0*", &star(&d.zero), &d.zero));
        r.check("star preserves one", 1, |_| expect_eq("1*", &star(&d.one), &d.one));
    }
    Ok(r)
}

/// Checks associativity, both unit laws and, when claimed, commutativity.
pub fn check_monoid_laws<C>(desc: &MonoidDescriptor<C>, samples: &[C]) -> Result<LawReport>
where
    C: Clone + PartialEq + Display + 'static,
{
    check_members(&desc.member, samples)?;
    let op = |a: &C, b: &C| (desc.op)(a, b);
    let e = &desc.unit;
    let p = pairs(samples);
    let t = triples(samples);
    let mut r = LawReport::new();
    r.check("associative", t.len(), |k| {
        let (a, b, c) = &t[k];
        expect_eq(&format!("({a}{b}){c} vs {a}({b}{c})"), &op(&op(a, b), c), &op(a, &op(b, c)))
    });
    r.check("left unit", samples.len(), |k| {
        let a = &samples[k];
        expect_eq(&format!("1·{a}"), &op(e, a), a)
    });
    r.check("right unit", samples.len(), |k| {
        let a = &samples[k];
        expect_eq(&format!("{a}·1"), &op(a, e), a)
    });
    if desc.commutative {
        r.check("commutative", p.len(), |k| {
            let (a, b) = &p[k];
            expect_eq(&format!("{a}·{b} vs {b}·{a}"), &op(a, b), &op(b, a))
        });
    }
    Ok(r)
}

/// The image of `n` under the unique semiring map ℕ → S: the `n`-fold sum of one.
pub fn canonical_from_nat<C: Clone + 'static>(desc: &SemiringDescriptor<C>, n: u64) -> C {
    (0..n).fold(desc.zero.clone(), |acc, _| desc.add(&acc, &desc.one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GaussianRational, Multiplicative, Nat, Tropical, Word};
    use num_bigint::BigInt;

    #[test]
    fn nat_laws_pass() {
        let samples: Vec<Nat> = [0, 1, 2, 3, 7].into_iter().map(Nat::new).collect();
        let r = check_semiring_laws(&SemiringDescriptor::<Nat>::of(), &samples).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.outcomes.len(), 8);
    }

    #[test]
    fn tropical_laws_pass() {
        let samples = vec![Tropical::Inf, Tropical::fin(0), Tropical::fin(1), Tropical::fin(4)];
        let r = check_semiring_laws(&SemiringDescriptor::<Tropical>::of(), &samples).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn subtraction_is_not_commutative() {
        let broken = SemiringDescriptor::new(
            "int-sub",
            |a: &BigInt, b: &BigInt| a - b,
            BigInt::from(0),
            |a: &BigInt, b: &BigInt| a * b,
            BigInt::from(1),
        );
        let samples: Vec<BigInt> = vec![1.into(), 2.into()];
        let r = check_semiring_laws(&broken, &samples).unwrap();
        let comm = r.find("add commutative").unwrap();
        assert!(!comm.passed());
        assert_eq!(comm.counterexample.as_deref(), Some("case 1: 1+2 vs 2+1: -1 != 1"));
    }

    #[test]
    fn gaussian_star_laws() {
        let samples = GaussianRational::pool();
        let r = check_semiring_laws(&SemiringDescriptor::<GaussianRational>::of_involutive(), &samples).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.outcomes.len(), 13);
    }

    #[test]
    fn membership_rejects_foreign_samples() {
        let d = SemiringDescriptor::<Nat>::of()
            .with_membership(|n: &Nat| if n.0 < 100u32.into() { Ok(()) } else { Err(n.to_string()) });
        let err = check_semiring_laws(&d, &[Nat::new(500)]).unwrap_err();
        assert!(matches!(err, Error::TagMismatch { .. }));
    }

    #[test]
    fn monoid_laws() {
        let words: Vec<Word> = ["", "a", "b", "ab"].iter().map(|w| w.parse().unwrap_or_default()).collect();
        let r = check_monoid_laws(&MonoidDescriptor::<Word>::of(), &words).unwrap();
        assert!(r.all_passed());
        assert!(r.find("commutative").is_none());

        let nats: Vec<_> = [1, 2, 3].into_iter().map(|n| Multiplicative(Nat::new(n))).collect();
        let r = check_monoid_laws(&MonoidDescriptor::<Multiplicative<Nat>>::of(), &nats).unwrap();
        assert!(r.all_passed());
        assert!(r.find("commutative").is_some());
    }

    #[test]
    fn first_projection_breaks_the_unit_law() {
        let broken = MonoidDescriptor::new("first", |a: &Word, _: &Word| a.clone(), Word::default(), false);
        let words = vec![Word::default(), "a".parse().unwrap()];
        let r = check_monoid_laws(&broken, &words).unwrap();
        assert!(!r.find("left unit").unwrap().passed());
        assert!(r.find("right unit").unwrap().passed());
    }

    #[test]
    fn canonical_map_examples() {
        assert_eq!(canonical_from_nat(&SemiringDescriptor::<Nat>::of(), 5), Nat::new(5));
        let trop = SemiringDescriptor::<Tropical>::of();
        assert_eq!(canonical_from_nat(&trop, 0), Tropical::Inf);
        assert_eq!(canonical_from_nat(&trop, 3), Tropical::fin(0));
    }
}
