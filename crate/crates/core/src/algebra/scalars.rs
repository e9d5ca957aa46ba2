//! The built-in exact semirings.

#![allow(clippy::suspicious_arithmetic_impl)]

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::traits::{Involutive, Semiring};
use crate::error::{Error, Result};

macro_rules! binop {
    ($ty:ident, $tr:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, other: $ty) -> $ty {
                let ($a, $b) = (self, other);
                $body
            }
        }
    };
}

macro_rules! identities {
    ($ty:ident, zero = $zero:expr, one = $one:expr) => {
        impl Zero for $ty {
            fn zero() -> Self {
                $zero
            }
            fn is_zero(&self) -> bool {
                *self == $zero
            }
        }
        impl One for $ty {
            fn one() -> Self {
                $one
            }
        }
    };
}

/// Natural numbers `(ℕ, +, ·)` with arbitrary precision.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Nat(pub BigUint);

impl Nat {
    pub fn new(n: u64) -> Self {
        Nat(BigUint::from(n))
    }
}

binop!(Nat, Add, add, |a, b| Nat(a.0 + b.0));
binop!(Nat, Mul, mul, |a, b| Nat(a.0 * b.0));
identities!(Nat, zero = Nat(BigUint::zero()), one = Nat(BigUint::one()));

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Nat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(Error::invalid_scalar(s, "expected a natural number"));
        }
        s.parse::<BigUint>()
            .map(Nat)
            .map_err(|e| Error::invalid_scalar(s, e.to_string()))
    }
}

impl Semiring for Nat {
    fn name() -> String {
        "nat".into()
    }
    fn pool() -> Vec<Self> {
        [0, 1, 2, 3, 7].into_iter().map(Nat::new).collect()
    }
    fn sample(rng: &mut dyn RngCore) -> Self {
        Nat::new(rng.gen_range(0..10))
    }
    fn from_nat(n: u64) -> Self {
        Nat::new(n)
    }
}

impl Involutive for Nat {
    fn star(&self) -> Self {
        self.clone()
    }
}

/// Booleans with `or` as addition and `and` as multiplication.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Boolean(pub bool);

binop!(Boolean, Add, add, |a, b| Boolean(a.0 || b.0));
binop!(Boolean, Mul, mul, |a, b| Boolean(a.0 && b.0));
identities!(Boolean, zero = Boolean(false), one = Boolean(true));

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl FromStr for Boolean {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(Boolean(false)),
            "1" => Ok(Boolean(true)),
            _ => Err(Error::invalid_scalar(s, "expected 0 or 1")),
        }
    }
}

impl Semiring for Boolean {
    fn name() -> String {
        "bool".into()
    }
    fn pool() -> Vec<Self> {
        vec![Boolean(false), Boolean(true)]
    }
    fn sample(rng: &mut dyn RngCore) -> Self {
        Boolean(rng.gen_bool(0.5))
    }
    fn from_nat(n: u64) -> Self {
        Boolean(n > 0)
    }
}

impl Involutive for Boolean {
    fn star(&self) -> Self {
        *self
    }
}

/// The min-plus semiring over `ℤ ∪ {∞}`: addition is `min`, multiplication
/// is `+`, zero is `∞` and one is `0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Tropical {
    Fin(BigInt),
    Inf,
}

impl Tropical {
    pub fn fin(n: i64) -> Self {
        Tropical::Fin(BigInt::from(n))
    }
}

binop!(Tropical, Add, add, |a, b| a.min(b));
binop!(Tropical, Mul, mul, |a, b| match (a, b) {
    (Tropical::Fin(x), Tropical::Fin(y)) => Tropical::Fin(x + y),
    _ => Tropical::Inf,
});
identities!(Tropical, zero = Tropical::Inf, one = Tropical::Fin(BigInt::zero()));

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::Fin(n) => write!(f, "{n}"),
            Tropical::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for Tropical {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Tropical::Inf);
        }
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(Error::invalid_scalar(s, "expected an integer or inf"));
        }
        s.parse::<BigInt>()
            .map(Tropical::Fin)
            .map_err(|e| Error::invalid_scalar(s, e.to_string()))
    }
}

impl Semiring for Tropical {
    fn name() -> String {
        "tropical".into()
    }
    fn pool() -> Vec<Self> {
        vec![Tropical::Inf, Tropical::fin(0), Tropical::fin(1), Tropical::fin(4), Tropical::fin(-2)]
    }
    fn sample(rng: &mut dyn RngCore) -> Self {
        if rng.gen_ratio(1, 5) {
            Tropical::Inf
        } else {
            Tropical::fin(rng.gen_range(-3..10))
        }
    }
    fn from_nat(n: u64) -> Self {
        if n == 0 {
            Tropical::Inf
        } else {
            Tropical::fin(0)
        }
    }
}

impl Involutive for Tropical {
    fn star(&self) -> Self {
        self.clone()
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let int_ok = |t: &str| {
        let d = t.strip_prefix('-').unwrap_or(t);
        !d.is_empty() && d.bytes().all(|c| c.is_ascii_digit())
    };
    if !int_ok(num) || den.is_some_and(|d| d.is_empty() || !d.bytes().all(|c| c.is_ascii_digit())) {
        return Err(Error::invalid_scalar(s, "expected a rational p or p/q"));
    }
    let n: BigInt = num.parse().map_err(|_| Error::invalid_scalar(s, "bad numerator"))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| Error::invalid_scalar(s, "bad denominator"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::invalid_scalar(s, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

/// Non-negative rationals `(ℚ≥0, +, ·)`. Negative values are rejected.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NonNegRational(BigRational);

impl NonNegRational {
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_negative() {
            Err(Error::invalid_scalar(&value.to_string(), "negative rational"))
        } else {
            Ok(NonNegRational(value))
        }
    }

    /// `num/den`; panics only on a zero denominator or a negative quotient.
    pub fn ratio(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        NonNegRational(BigRational::new(num.into(), den.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

binop!(NonNegRational, Add, add, |a, b| NonNegRational(a.0 + b.0));
binop!(NonNegRational, Mul, mul, |a, b| NonNegRational(a.0 * b.0));
identities!(
    NonNegRational,
    zero = NonNegRational(BigRational::zero()),
    one = NonNegRational(BigRational::one())
);

impl fmt::Display for NonNegRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for NonNegRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NonNegRational::new(parse_rational(s)?)
    }
}

impl Semiring for NonNegRational {
    fn name() -> String {
        "rational".into()
    }
    fn pool() -> Vec<Self> {
        vec![
            NonNegRational::ratio(0, 1),
            NonNegRational::ratio(1, 1),
            NonNegRational::ratio(1, 2),
            NonNegRational::ratio(3, 4),
            NonNegRational::ratio(5, 1),
        ]
    }
    fn sample(rng: &mut dyn RngCore) -> Self {
        NonNegRational::ratio(rng.gen_range(0..7), rng.gen_range(1..5))
    }
}

impl Involutive for NonNegRational {
    fn star(&self) -> Self {
        self.clone()
    }
}

/// Gaussian rationals `ℚ[i]` with complex conjugation as involution.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational(pub Complex<BigRational>);

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational(Complex::new(re, im))
    }

    /// `re + im·i` from integers.
    pub fn int(re: i64, im: i64) -> Self {
        Self::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    pub fn re(&self) -> &BigRational {
        &self.0.re
    }

    pub fn im(&self) -> &BigRational {
        &self.0.im
    }
}

impl PartialOrd for GaussianRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GaussianRational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.0.re, &self.0.im).cmp(&(&other.0.re, &other.0.im))
    }
}

binop!(GaussianRational, Add, add, |a, b| GaussianRational(a.0 + b.0));
binop!(GaussianRational, Mul, mul, |a, b| GaussianRational(a.0 * b.0));
identities!(
    GaussianRational,
    zero = GaussianRational(Complex::zero()),
    one = GaussianRational(Complex::one())
);

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (&self.0.re, &self.0.im);
        let imag = |f: &mut fmt::Formatter<'_>, leading: bool| -> fmt::Result {
            let sign = if im.is_negative() {
                "-"
            } else if leading {
                ""
            } else {
                "+"
            };
            let mag = im.abs();
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        match (re.is_zero(), im.is_zero()) {
            (_, true) => write!(f, "{re}"),
            (true, false) => imag(f, true),
            (false, false) => {
                write!(f, "{re}")?;
                imag(f, false)
            }
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::new(parse_rational(s)?, BigRational::zero()));
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_text, im_text) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_text.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_text).map_err(|_| Error::invalid_scalar(s, "bad real part"))?
        };
        let im_digits = im_text.strip_prefix('+').unwrap_or(im_text);
        let im = match im_digits {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rational(t).map_err(|_| Error::invalid_scalar(s, "bad imaginary part"))?,
        };
        Ok(Self::new(re, im))
    }
}

impl Semiring for GaussianRational {
    fn name() -> String {
        "gaussian".into()
    }
    fn pool() -> Vec<Self> {
        let half = BigRational::new(1.into(), 2.into());
        vec![
            GaussianRational::int(0, 0),
            GaussianRational::int(1, 0),
            GaussianRational::int(0, 1),
            GaussianRational::int(1, -2),
            GaussianRational::new(half.clone(), -half),
        ]
    }
    fn sample(rng: &mut dyn RngCore) -> Self {
        let part = |rng: &mut dyn RngCore| {
            BigRational::new(rng.gen_range(-3i64..4).into(), rng.gen_range(1i64..3).into())
        };
        let re = part(rng);
        let im = part(rng);
        GaussianRational::new(re, im)
    }
}

impl Involutive for GaussianRational {
    fn star(&self) -> Self {
        GaussianRational(self.0.conj())
    }
}
