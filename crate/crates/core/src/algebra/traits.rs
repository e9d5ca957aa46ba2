//! Semiring, involution and monoid interfaces.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use rand::RngCore;

/// A commutative semiring with exact, structurally comparable elements.
///
/// `+` and `*` are the semiring addition and multiplication; `zero()` and
/// `one()` their units. Implementations must keep values in canonical form so
/// that `==` is equality in the semiring.
pub trait Semiring:
    Zero + One + Add<Output = Self> + Mul<Output = Self> + Clone + Ord + Debug + Display + Send + Sync + 'static
{
    /// Short identifier used in file headers and reports.
    fn name() -> String;

    /// Curated values including the boundary cases (zero, one, infinity, `i`).
    fn pool() -> Vec<Self>;

    /// A random small element.
    fn sample(rng: &mut dyn RngCore) -> Self;

    /// The `n`-fold sum of `one()`, the image of `n` under ℕ → S.
    fn from_nat(n: u64) -> Self {
        (0..n).fold(Self::zero(), |acc, _| acc + Self::one())
    }
}

/// A semiring with an involution `*` preserving `+`, `·`, `0` and `1`.
pub trait Involutive: Semiring {
    fn star(&self) -> Self;
}

/// A monoid `(M, ·, 1)` with structurally comparable elements.
pub trait Monoid: Clone + Ord + Debug + Display + Send + Sync + 'static {
    fn name() -> String;
    fn unit() -> Self;
    fn op(&self, other: &Self) -> Self;

    /// Whether the operation is claimed to be commutative.
    fn commutative() -> bool {
        false
    }

    fn pool() -> Vec<Self>;
    fn sample(rng: &mut dyn RngCore) -> Self;
}

/// Marker for monoids whose operation commutes.
pub trait CommutativeMonoid: Monoid {}
