//! Runtime-tagged scalars for file formats and the command line.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::descriptor::SemiringDescriptor;
use super::scalars::{Boolean, GaussianRational, Nat, NonNegRational, Tropical};
use super::traits::{Involutive, Semiring};
use crate::error::{Error, Result};

/// Identifier of a built-in semiring.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SemiringTag {
    Nat,
    Bool,
    Tropical,
    Rational,
    Gaussian,
}

impl SemiringTag {
    pub const ALL: [SemiringTag; 5] = [
        SemiringTag::Nat,
        SemiringTag::Bool,
        SemiringTag::Tropical,
        SemiringTag::Rational,
        SemiringTag::Gaussian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemiringTag::Nat => "nat",
            SemiringTag::Bool => "bool",
            SemiringTag::Tropical => "tropical",
            SemiringTag::Rational => "rational",
            SemiringTag::Gaussian => "gaussian",
        }
    }

    pub fn involutive(self) -> bool {
        self == SemiringTag::Gaussian
    }

    /// Parses a scalar in this semiring's text grammar.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        Ok(match self {
            SemiringTag::Nat => Scalar::Nat(text.parse()?),
            SemiringTag::Bool => Scalar::Bool(text.parse()?),
            SemiringTag::Tropical => Scalar::Tropical(text.parse()?),
            SemiringTag::Rational => Scalar::Rational(text.parse()?),
            SemiringTag::Gaussian => Scalar::Gaussian(text.parse()?),
        })
    }

    pub fn zero(self) -> Scalar {
        match self {
            SemiringTag::Nat => Scalar::Nat(Nat::zero()),
            SemiringTag::Bool => Scalar::Bool(Boolean::zero()),
            SemiringTag::Tropical => Scalar::Tropical(Tropical::zero()),
            SemiringTag::Rational => Scalar::Rational(NonNegRational::zero()),
            SemiringTag::Gaussian => Scalar::Gaussian(GaussianRational::zero()),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            SemiringTag::Nat => Scalar::Nat(Nat::one()),
            SemiringTag::Bool => Scalar::Bool(Boolean::one()),
            SemiringTag::Tropical => Scalar::Tropical(Tropical::one()),
            SemiringTag::Rational => Scalar::Rational(NonNegRational::one()),
            SemiringTag::Gaussian => Scalar::Gaussian(GaussianRational::one()),
        }
    }

    /// The operation table over tagged scalars; only ℚ[i] carries a star.
    pub fn descriptor(self) -> SemiringDescriptor<Scalar> {
        let tag = self;
        let op = move |op: ScalarOp| {
            move |a: &Scalar, b: &Scalar| {
                scalar_eval(tag, op, &[a.clone(), b.clone()]).expect("operands validated by membership")
            }
        };
        let desc = SemiringDescriptor::new(tag.name(), op(ScalarOp::Add), tag.zero(), op(ScalarOp::Mul), tag.one())
            .with_membership(move |s: &Scalar| {
                if s.tag() == tag {
                    Ok(())
                } else {
                    Err(s.tag().name().to_string())
                }
            });
        if tag.involutive() {
            desc.with_star(move |s: &Scalar| scalar_eval(tag, ScalarOp::Star, std::slice::from_ref(s)).expect("operand validated"))
        } else {
            desc
        }
    }
}

impl fmt::Display for SemiringTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemiringTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SemiringTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownSemiring(s.to_string()))
    }
}

/// A value of one of the built-in semirings, tagged with its semiring.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Scalar {
    Nat(Nat),
    Bool(Boolean),
    Tropical(Tropical),
    Rational(NonNegRational),
    Gaussian(GaussianRational),
}

impl Scalar {
    pub fn tag(&self) -> SemiringTag {
        match self {
            Scalar::Nat(_) => SemiringTag::Nat,
            Scalar::Bool(_) => SemiringTag::Bool,
            Scalar::Tropical(_) => SemiringTag::Tropical,
            Scalar::Rational(_) => SemiringTag::Rational,
            Scalar::Gaussian(_) => SemiringTag::Gaussian,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Nat(s) => write!(f, "{s}"),
            Scalar::Bool(s) => write!(f, "{s}"),
            Scalar::Tropical(s) => write!(f, "{s}"),
            Scalar::Rational(s) => write!(f, "{s}"),
            Scalar::Gaussian(s) => write!(f, "{s}"),
        }
    }
}

/// Operation selector for [`scalar_eval`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarOp {
    Add,
    Mul,
    Star,
}

fn binary<S: Semiring>(op: ScalarOp, a: &S, b: &S) -> S {
    match op {
        ScalarOp::Add => a.clone() + b.clone(),
        _ => a.clone() * b.clone(),
    }
}

/// Evaluates `op` on tagged scalars of the semiring `tag`.
pub fn scalar_eval(tag: SemiringTag, op: ScalarOp, args: &[Scalar]) -> Result<Scalar> {
    if let Some(bad) = args.iter().find(|s| s.tag() != tag) {
        return Err(Error::TagMismatch {
            expected: tag.name().into(),
            found: bad.tag().name().into(),
        });
    }
    let arity = if op == ScalarOp::Star { 1 } else { 2 };
    if args.len() != arity {
        return Err(Error::DimensionMismatch(format!("{op:?} takes {arity} arguments, got {}", args.len())));
    }
    Ok(match (op, &args[0], args.get(1)) {
        (ScalarOp::Star, Scalar::Gaussian(g), None) => Scalar::Gaussian(g.star()),
        (ScalarOp::Star, _, _) => return Err(Error::NoInvolution(tag.name().into())),
        (op, Scalar::Nat(a), Some(Scalar::Nat(b))) => Scalar::Nat(binary(op, a, b)),
        (op, Scalar::Bool(a), Some(Scalar::Bool(b))) => Scalar::Bool(binary(op, a, b)),
        (op, Scalar::Tropical(a), Some(Scalar::Tropical(b))) => Scalar::Tropical(binary(op, a, b)),
        (op, Scalar::Rational(a), Some(Scalar::Rational(b))) => Scalar::Rational(binary(op, a, b)),
        (op, Scalar::Gaussian(a), Some(Scalar::Gaussian(b))) => Scalar::Gaussian(binary(op, a, b)),
        _ => unreachable!("tags checked above"),
    })
}
