//! Seeded sampling of carriers, maps and (nested) monad values.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Semiring;
use crate::matcat::{Aleph0Map, Matrix};
use crate::monadcore::{CarrierMap, Elem, FiniteCarrier, Monad};

/// Largest sampled carrier.
pub const MAX_CARRIER: usize = 5;
/// Largest support of a sampled value.
pub const MAX_SUPPORT: usize = 4;
/// Largest sampled matrix dimension.
pub const MAX_DIM: usize = 4;

/// Hands out one independent generator per law, so reports do not depend
/// on the order in which laws run.
#[derive(Clone, Copy, Debug)]
pub struct Sampler {
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&self, law: &str) -> ChaCha8Rng {
        // FNV-1a over the law name, mixed into the seed.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in law.bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

/// A carrier `{prefix0, …}` with between 1 and [`MAX_CARRIER`] elements.
pub fn carrier(rng: &mut dyn RngCore, prefix: &str) -> FiniteCarrier {
    let n = rng.gen_range(1..=MAX_CARRIER);
    FiniteCarrier::new((0..n).map(|i| Elem::sym(&format!("{prefix}{i}"))))
}

/// A uniformly random function between carriers (`cod` nonempty).
pub fn map(rng: &mut dyn RngCore, dom: &FiniteCarrier, cod: &FiniteCarrier) -> CarrierMap {
    CarrierMap::from_table(dom.iter().map(|x| (x.clone(), cod.elems().choose(rng).expect("nonempty").clone())))
}

pub fn value<T: Monad>(rng: &mut dyn RngCore, carrier: &FiniteCarrier) -> T::Value {
    T::sample_value(rng, carrier, MAX_SUPPORT)
}

/// A carrier of 1 to 3 embedded values over `inner`, for building `T(T(X))`.
pub fn embedded_carrier<T: Monad>(rng: &mut dyn RngCore, inner: &FiniteCarrier) -> FiniteCarrier {
    let k = rng.gen_range(1..=3);
    FiniteCarrier::new((0..k).map(|_| T::embed(value::<T>(rng, inner))))
}

/// A value of `T(T(X))`.
pub fn nested<T: Monad>(rng: &mut dyn RngCore, inner: &FiniteCarrier) -> T::Value {
    let outer = embedded_carrier::<T>(rng, inner);
    value::<T>(rng, &outer)
}

/// A value of `T(T(T(X)))`.
pub fn nested3<T: Monad>(rng: &mut dyn RngCore, inner: &FiniteCarrier) -> T::Value {
    let k = rng.gen_range(1..=3);
    let middle = FiniteCarrier::new((0..k).map(|_| T::embed(nested::<T>(rng, inner))));
    value::<T>(rng, &middle)
}

/// A dimension in `0..=MAX_DIM`.
pub fn dim(rng: &mut dyn RngCore) -> usize {
    rng.gen_range(0..=MAX_DIM)
}

pub fn matrix<S: Semiring>(rng: &mut dyn RngCore, rows: usize, cols: usize) -> Matrix<S> {
    Matrix::random(rng, rows, cols)
}

/// A random function `i → m`; `m` must be positive unless `i` is zero.
pub fn aleph0(rng: &mut dyn RngCore, i: usize, m: usize) -> Aleph0Map {
    let table = (0..i).map(|_| rng.gen_range(0..m)).collect();
    Aleph0Map::new(m, table).expect("values below m")
}

/// A random scalar, drawn half the time from the curated pool.
pub fn scalar<S: Semiring>(rng: &mut dyn RngCore) -> S {
    if rng.gen_bool(0.5) {
        S::pool().choose(rng).expect("nonempty pool").clone()
    } else {
        S::sample(rng)
    }
}

/// A matrix of random shape, at most `MAX_DIM × MAX_DIM`.
pub fn any_matrix<S: Semiring>(rng: &mut dyn RngCore) -> Matrix<S> {
    let (rows, cols) = (dim(rng), dim(rng));
    matrix(rng, rows, cols)
}
