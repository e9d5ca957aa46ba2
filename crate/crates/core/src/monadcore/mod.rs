//! Concrete monads on finite sets and the structure derived from them.
//!
//! [`MultisetMonad`] and [`ActionMonad`] implement [`Monad`]; everything in
//! [`derived`] (strength, double strength, `bc`, addition on `T(X)`, the
//! `T(1)` semiring and its action) is computed generically from `η`, `μ`
//! and `T(−)`.

mod action;
mod at_one;
mod carrier;
pub mod derived;
mod elem;
mod monad;
mod multiset;

pub use action::{action_mult, action_unit, ActValue, ActionMonad};
pub use at_one::{eval_at_one, eval_at_one_involutive, eval_at_one_monoid, AtOne};
pub use carrier::{CarrierMap, FiniteCarrier};
pub use derived::{
    bc, bc_inv, codiagonal, commutativity_witness, dst, first_projection, map_with, scalar_action,
    scalar_action_by_strength, second_projection, strength, swapped_strength, t1_mul, t1_unit, tx_add,
    tx_add_over, tx_zero, Commutation,
};
pub use elem::{Elem, ElemValue, Embedded};
pub use monad::{AdditiveMonad, CommutativeMonad, InvolutiveMonad, Monad};
pub use multiset::{ms_dst, ms_fmap, ms_involution, ms_mult, ms_unit, Multiset, MultisetMonad};
