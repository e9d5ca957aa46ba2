//! Exact commutative semirings, involutions and monoids.
//!
//! Five semirings ship built in: [`Nat`], [`Boolean`], [`Tropical`],
//! [`NonNegRational`] and [`GaussianRational`]. Each is a static type
//! implementing [`Semiring`]; [`Scalar`] and [`SemiringTag`] provide the
//! tagged view used by text formats.

mod descriptor;
mod dynamic;
mod monoids;
mod scalars;
mod traits;

pub use descriptor::{
    canonical_from_nat, check_monoid_laws, check_semiring_laws, BinOp, Membership, MonoidDescriptor,
    SemiringDescriptor, UnOp,
};
pub use dynamic::{scalar_eval, Scalar, ScalarOp, SemiringTag};
pub use monoids::{Multiplicative, Word, ALPHABET};
pub use scalars::{Boolean, GaussianRational, Nat, NonNegRational, Tropical};
pub use traits::{CommutativeMonoid, Involutive, Monoid, Semiring};
