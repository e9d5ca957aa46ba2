//! Transposes of the three adjunctions and the seeded law harness.

pub mod laws;
pub mod roundtrip;
mod sampling;
mod suite;
mod transposes;
mod witness;

pub use sampling::{Sampler, MAX_CARRIER, MAX_DIM, MAX_SUPPORT};
pub use transposes::{
    transpose_math_down, transpose_math_up, transpose_mon_down, transpose_mon_up, transpose_srng_down,
    transpose_srng_up,
};
pub use witness::{canonical, MonadMap, MonoidMap, SemiringMap, TheoryFunctor};
pub use suite::{run_roundtrip, run_suite, Adjunction, MonoidTag, Suite, SuiteConfig, SuiteReport};
