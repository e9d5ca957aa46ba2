//! Built-in monoids: free words and the multiplicative reduct of a semiring.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore};

use super::traits::{CommutativeMonoid, Monoid, Semiring};
use crate::error::{Error, Result};

/// Alphabet used when sampling words.
pub const ALPHABET: [char; 4] = ['a', 'b', 'c', 'd'];

/// The free monoid over lowercase letters under concatenation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(String);

impl Word {
    pub fn new(letters: &str) -> Result<Self> {
        if letters.chars().all(|c| c.is_ascii_lowercase()) {
            Ok(Word(letters.to_string()))
        } else {
            Err(Error::invalid_scalar(letters, "words use letters a-z"))
        }
    }

    pub fn letters(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.0)
        }
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "ε" {
            Ok(Word::default())
        } else {
            Word::new(s)
        }
    }
}

impl Monoid for Word {
    fn name() -> String {
        "free-words".into()
    }
    fn unit() -> Self {
        Word::default()
    }
    fn op(&self, other: &Self) -> Self {
        Word(format!("{}{}", self.0, other.0))
    }
    fn pool() -> Vec<Self> {
        ["", "a", "b", "ab"].iter().map(|w| Word(w.to_string())).collect()
    }
    fn sample(rng: &mut dyn RngCore) -> Self {
        let len = rng.gen_range(0..4);
        Word((0..len).map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())]).collect())
    }
}

/// The multiplicative monoid `(S, ·, 1)` of a semiring.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multiplicative<S>(pub S);

impl<S: Semiring> fmt::Display for Multiplicative<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<S: Semiring> Monoid for Multiplicative<S> {
    fn name() -> String {
        format!("{}-mul", S::name())
    }
    fn unit() -> Self {
        Multiplicative(S::one())
    }
    fn op(&self, other: &Self) -> Self {
        Multiplicative(self.0.clone() * other.0.clone())
    }
    fn commutative() -> bool {
        true
    }
    fn pool() -> Vec<Self> {
        S::pool().into_iter().map(Multiplicative).collect()
    }
    fn sample(rng: &mut dyn RngCore) -> Self {
        Multiplicative(S::sample(rng))
    }
}

impl<S: Semiring> CommutativeMonoid for Multiplicative<S> {}
