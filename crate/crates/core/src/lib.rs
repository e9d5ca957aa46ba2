//! Exact semiring algebra with executable categorical structure.
//!
//! The crate realises, on finite sets and exact scalars:
//!
//! * commutative (involutive) semirings and monoids ([`algebra`]);
//! * the multiset monad `M_S` and the action monad `A(M)`, with strength,
//!   double strength, `bc` and the semiring `T(1)` ([`monadcore`]);
//! * the matrix Lawvere theory `Mat(S)` with biproducts, tensor and dagger
//!   ([`matcat`]);
//! * finitary Kleisli categories and their isomorphism with matrices
//!   ([`kleisli`]);
//! * the free-theory monad of a matrix theory ([`freetheory`]);
//! * transposes for the monoid, semiring and theory adjunctions, plus the
//!   seeded law harness ([`adjunctions`]).

pub mod adjunctions;
pub mod algebra;
mod error;
pub mod freetheory;
pub mod kleisli;
pub mod matcat;
pub mod monadcore;
pub mod report;

pub use error::{Error, Result};

pub use algebra::{
    Boolean, GaussianRational, Involutive, Monoid, Multiplicative, Nat, NonNegRational, Scalar, Semiring,
    SemiringTag, Tropical, Word,
};
pub use kleisli::KleisliMap;
pub use matcat::{Aleph0Map, HomOne, Matrix};
pub use monadcore::{ActValue, ActionMonad, AtOne, Elem, FiniteCarrier, Monad, Multiset, MultisetMonad};
pub use report::LawReport;

/// Multisets with natural-number multiplicities.
pub type NatMultiset = Multiset<Nat>;
/// The multiset monad over ℕ.
pub type NatMultisetMonad = MultisetMonad<Nat>;
/// The action monad of the free word monoid.
pub type WordActionMonad = ActionMonad<Word>;
/// The action monad of multiplicative ℕ.
pub type NatMulActionMonad = ActionMonad<Multiplicative<Nat>>;
/// Matrices over ℕ.
pub type NatMatrix = Matrix<Nat>;
/// Matrices over the min-plus semiring.
pub type TropicalMatrix = Matrix<Tropical>;
/// Matrices over the Gaussian rationals.
pub type GaussianMatrix = Matrix<GaussianRational>;
