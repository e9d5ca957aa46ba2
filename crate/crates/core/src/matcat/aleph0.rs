//! Functions between finite ordinals and their embedding into `Mat(S)`.

use std::fmt;

use super::matrix::Matrix;
use crate::algebra::Semiring;
use crate::error::{Error, Result};

/// A function `{0..dom−1} → {0..cod−1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Aleph0Map {
    dom: usize,
    cod: usize,
    table: Vec<usize>,
}

impl Aleph0Map {
    pub fn new(cod: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&j| j >= cod) {
            return Err(Error::IndexOutOfRange { index: bad, bound: cod });
        }
        Ok(Aleph0Map { dom: table.len(), cod, table })
    }

    pub fn from_fn(dom: usize, cod: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::new(cod, (0..dom).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        Aleph0Map { dom: n, cod: n, table: (0..n).collect() }
    }

    /// The unique map `0 → n`.
    pub fn initial(n: usize) -> Self {
        Aleph0Map { dom: 0, cod: n, table: Vec::new() }
    }

    /// The symmetry `n + m → m + n`.
    pub fn sum_swap(n: usize, m: usize) -> Self {
        let table = (0..n + m).map(|i| if i < n { m + i } else { i - n }).collect();
        Aleph0Map { dom: n + m, cod: n + m, table }
    }

    /// The symmetry `n ⊗ m → m ⊗ n` on flattened coordinates.
    pub fn tensor_swap(n: usize, m: usize) -> Self {
        let table = (0..n * m).map(|c| (c % m) * n + c / m).collect();
        Aleph0Map { dom: n * m, cod: n * m, table }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &Aleph0Map) -> Result<Self> {
        if self.cod != then.dom {
            return Err(Error::DimensionMismatch(format!("cannot compose {} → {} with {} → {}", self.dom, self.cod, then.dom, then.cod)));
        }
        Ok(Aleph0Map { dom: self.dom, cod: then.cod, table: self.table.iter().map(|&j| then.table[j]).collect() })
    }

    /// The 0/1 matrix with `entry(i, j) = 1` iff `f(i) = j`.
    pub fn embed<S: Semiring>(&self) -> Matrix<S> {
        Matrix::from_fn(self.dom, self.cod, |i, j| if self.table[i] == j { S::one() } else { S::zero() })
    }
}

impl fmt::Display for Aleph0Map {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} {:?}", self.dom, self.cod, self.table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Nat;

    #[test]
    fn embedding_examples() {
        let swap = Aleph0Map::new(2, vec![1, 0]).unwrap();
        let m: Matrix<Nat> = swap.embed();
        assert_eq!(m.to_string(), "[[0,1],[1,0]]");
        assert_eq!(Aleph0Map::identity(3).embed::<Nat>(), Matrix::identity(3));
        let init = Aleph0Map::initial(3).embed::<Nat>();
        assert_eq!((init.rows(), init.cols()), (0, 3));
    }

    #[test]
    fn embedding_is_functorial() {
        let f = Aleph0Map::new(3, vec![2, 0]).unwrap();
        let g = Aleph0Map::new(2, vec![1, 1, 0]).unwrap();
        let composite = f.then(&g).unwrap().embed::<Nat>();
        assert_eq!(composite, f.embed::<Nat>().compose(&g.embed()).unwrap());
    }

    #[test]
    fn rejects_out_of_range_images() {
        assert_eq!(Aleph0Map::new(2, vec![0, 2]), Err(Error::IndexOutOfRange { index: 2, bound: 2 }));
    }

    #[test]
    fn tensor_swap_exchanges_coordinates() {
        let s = Aleph0Map::tensor_swap(2, 3);
        for a in 0..2 {
            for b in 0..3 {
                assert_eq!(s.apply(a * 3 + b), b * 2 + a);
            }
        }
        assert_eq!(s.then(&Aleph0Map::tensor_swap(3, 2)).unwrap(), Aleph0Map::identity(6));
    }
}
