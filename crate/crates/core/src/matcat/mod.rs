//! The matrix Lawvere theory `Mat(S)`.
//!
//! Objects are natural numbers and an `n → m` morphism is an `n × m`
//! [`Matrix`]. `+` on objects is a biproduct, `⊗` is multiplication of
//! objects with coordinates flattened as `c = a·m + b`, and involutive
//! semirings give a dagger.

mod aleph0;
mod homset;
pub mod io;
mod matrix;

pub use aleph0::Aleph0Map;
pub use homset::{homset_semiring, homset_semiring_involutive, HomOne};
pub use io::{parse_mat, render_mat, DynMatrix};
pub use matrix::{coord_join, coord_split, mat_structural, Matrix, Structural};
