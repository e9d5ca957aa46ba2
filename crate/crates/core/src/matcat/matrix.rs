//! Morphisms of `Mat(S)`: an `n → m` morphism is an `n × m` matrix, and
//! composition is `(h ∘ g)(i, k) = Σ_j g(i, j) · h(j, k)`.

use std::fmt;

use rand::{Rng, RngCore};

use crate::algebra::{Involutive, Semiring};
use crate::error::{Error, Result};

/// An `n → m` morphism of `Mat(S)`, stored row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

fn mismatch(what: impl Into<String>) -> Error {
    Error::DimensionMismatch(what.into())
}

impl<S: Semiring> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(mismatch(format!("{rows}x{cols} matrix needs {} entries, got {}", rows * cols, entries.len())));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from rows of equal length; no rows gives `0 × 0`.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(mismatch(format!("ragged rows: {} vs {cols}", bad.len())));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let entries = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        Matrix { rows, cols, entries }
    }

    pub fn random(rng: &mut dyn RngCore, rows: usize, cols: usize) -> Self {
        let entries = (0..rows * cols).map(|_| S::sample(rng)).collect();
        Matrix { rows, cols, entries }
    }

    /// A random matrix with both dimensions in `1..=max`.
    pub fn random_upto(rng: &mut dyn RngCore, max: usize) -> Self {
        let (n, m) = (rng.gen_range(1..=max), rng.gen_range(1..=max));
        Self::random(rng, n, m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) outside {}x{}", self.rows, self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<R: Semiring>(&self, f: impl Fn(&S) -> R) -> Matrix<R> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// The identity `n → n`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The zero morphism `n → m`.
    pub fn zero(n: usize, m: usize) -> Self {
        Self::from_fn(n, m, |_, _| S::zero())
    }

    /// `then ∘ self`: first `self: n → m`, then `then: m → p`.
    pub fn compose(&self, then: &Matrix<S>) -> Result<Self> {
        if self.cols != then.rows {
            return Err(mismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, then.rows, then.cols
            )));
        }
        Ok(Self::from_fn(self.rows, then.cols, |i, k| {
            (0..self.cols).fold(S::zero(), |acc, j| acc + self.get(i, j).clone() * then.get(j, k).clone())
        }))
    }

    /// `κ₁: n → n + m`, with `κ₁(i, j) = 1` iff `i = j`.
    pub fn coproj1(n: usize, m: usize) -> Self {
        Self::from_fn(n, n + m, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// `κ₂: m → n + m`, with `κ₂(i, j) = 1` iff `j = n + i`.
    pub fn coproj2(n: usize, m: usize) -> Self {
        Self::from_fn(m, n + m, |i, j| if j >= n && j - n == i { S::one() } else { S::zero() })
    }

    /// `π₁: n + m → n`, the transpose of `κ₁`.
    pub fn proj1(n: usize, m: usize) -> Self {
        Self::coproj1(n, m).transpose()
    }

    /// `π₂: n + m → m`, the transpose of `κ₂`.
    pub fn proj2(n: usize, m: usize) -> Self {
        Self::coproj2(n, m).transpose()
    }

    /// `[f, g]: n + m → p` for `f: n → p`, `g: m → p`: rows stacked.
    pub fn cotuple(f: &Matrix<S>, g: &Matrix<S>) -> Result<Self> {
        if f.cols != g.cols {
            return Err(mismatch(format!("cotuple of maps into {} and {}", f.cols, g.cols)));
        }
        let entries = f.entries.iter().chain(g.entries.iter()).cloned().collect();
        Self::new(f.rows + g.rows, f.cols, entries)
    }

    /// `⟨f, g⟩: p → n + m` for `f: p → n`, `g: p → m`: columns juxtaposed.
    pub fn tuple(f: &Matrix<S>, g: &Matrix<S>) -> Result<Self> {
        if f.rows != g.rows {
            return Err(mismatch(format!("tuple of maps out of {} and {}", f.rows, g.rows)));
        }
        Ok(Self::from_fn(f.rows, f.cols + g.cols, |i, j| {
            if j < f.cols {
                f.get(i, j).clone()
            } else {
                g.get(i, j - f.cols).clone()
            }
        }))
    }

    /// Left-nested cotuple `[[[f₀, f₁], f₂], …]` into `cod`.
    pub fn cotuple_all(parts: &[Matrix<S>], cod: usize) -> Result<Self> {
        parts.iter().try_fold(Self::zero(0, cod), |acc, f| Self::cotuple(&acc, f))
    }

    /// Left-nested tuple `⟨⟨⟨f₀, f₁⟩, f₂⟩, …⟩` out of `dom`.
    pub fn tuple_all(parts: &[Matrix<S>], dom: usize) -> Result<Self> {
        parts.iter().try_fold(Self::zero(dom, 0), |acc, f| Self::tuple(&acc, f))
    }

    /// `f ⊕ g: n + m → p + q`, the block-diagonal matrix.
    pub fn direct_sum(f: &Matrix<S>, g: &Matrix<S>) -> Self {
        Self::from_fn(f.rows + g.rows, f.cols + g.cols, |i, j| match (i < f.rows, j < f.cols) {
            (true, true) => f.get(i, j).clone(),
            (false, false) => g.get(i - f.rows, j - f.cols).clone(),
            _ => S::zero(),
        })
    }

    /// `Δ = ⟨id, id⟩: n → n + n`.
    pub fn diagonal(n: usize) -> Self {
        Self::tuple(&Self::identity(n), &Self::identity(n)).expect("same domain")
    }

    /// `∇ = [id, id]: n + n → n`.
    pub fn codiagonal(n: usize) -> Self {
        Self::cotuple(&Self::identity(n), &Self::identity(n)).expect("same codomain")
    }

    /// The homset sum `f + g = ∇ ∘ (f ⊕ g) ∘ Δ`.
    pub fn homset_add(f: &Matrix<S>, g: &Matrix<S>) -> Result<Self> {
        if (f.rows, f.cols) != (g.rows, g.cols) {
            return Err(mismatch(format!("sum of {}x{} and {}x{}", f.rows, f.cols, g.rows, g.cols)));
        }
        Self::diagonal(f.rows)
            .compose(&Self::direct_sum(f, g))?
            .compose(&Self::codiagonal(f.cols))
    }

    /// `g ⊗ h: m·n → p·q` with `(g ⊗ h)((i₀,i₁),(j₀,j₁)) = g(i₀,j₀)·h(i₁,j₁)`,
    /// indices flattened by `c = a·m + b`.
    pub fn tensor(g: &Matrix<S>, h: &Matrix<S>) -> Self {
        Self::from_fn(g.rows * h.rows, g.cols * h.cols, |r, c| {
            let (i0, i1) = (r / h.rows, r % h.rows);
            let (j0, j1) = (c / h.cols, c % h.cols);
            g.get(i0, j0).clone() * h.get(i1, j1).clone()
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }
}

impl<S: Involutive> Matrix<S> {
    /// `f†(i, j) = f(j, i)*`.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).star())
    }
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Arguments selecting a structural morphism of the biproduct structure.
#[derive(Clone, Copy, Debug)]
pub enum Structural<'a, S> {
    Coproj1 { n: usize, m: usize },
    Coproj2 { n: usize, m: usize },
    Proj1 { n: usize, m: usize },
    Proj2 { n: usize, m: usize },
    Cotuple(&'a Matrix<S>, &'a Matrix<S>),
    Tuple(&'a Matrix<S>, &'a Matrix<S>),
}

/// Builds the structural morphism described by `kind`.
pub fn mat_structural<S: Semiring>(kind: Structural<'_, S>) -> Result<Matrix<S>> {
    match kind {
        Structural::Coproj1 { n, m } => Ok(Matrix::coproj1(n, m)),
        Structural::Coproj2 { n, m } => Ok(Matrix::coproj2(n, m)),
        Structural::Proj1 { n, m } => Ok(Matrix::proj1(n, m)),
        Structural::Proj2 { n, m } => Ok(Matrix::proj2(n, m)),
        Structural::Cotuple(f, g) => Matrix::cotuple(f, g),
        Structural::Tuple(f, g) => Matrix::tuple(f, g),
    }
}

/// `split(c) = (a, b)` with `c = a·m + b` and `b < m`.
pub fn coord_split(n: usize, m: usize, c: usize) -> Result<(usize, usize)> {
    if c >= n * m {
        return Err(Error::IndexOutOfRange { index: c, bound: n * m });
    }
    Ok((c / m, c % m))
}

/// `join(a, b) = a·m + b`.
pub fn coord_join(n: usize, m: usize, a: usize, b: usize) -> Result<usize> {
    if a >= n {
        return Err(Error::IndexOutOfRange { index: a, bound: n });
    }
    if b >= m {
        return Err(Error::IndexOutOfRange { index: b, bound: m });
    }
    Ok(a * m + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GaussianRational, Nat, Tropical};
    use proptest::prelude::*;

    fn nat(rows: &[&[u64]]) -> Matrix<Nat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&n| Nat::new(n)).collect()).collect()).unwrap()
    }

    fn trop(rows: &[&[i64]]) -> Matrix<Tropical> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&n| Tropical::fin(n)).collect()).collect()).unwrap()
    }

    #[test]
    fn identities() {
        assert_eq!(Matrix::<Nat>::identity(2), nat(&[&[1, 0], &[0, 1]]));
        assert_eq!(Matrix::<Tropical>::identity(2).to_string(), "[[0,inf],[inf,0]]");
        let empty = Matrix::<Nat>::identity(0);
        assert_eq!((empty.rows(), empty.cols()), (0, 0));
    }

    #[test]
    fn composition_examples() {
        let g = nat(&[&[1, 2], &[0, 1]]);
        let h = nat(&[&[3], &[4]]);
        assert_eq!(g.compose(&h).unwrap(), nat(&[&[11], &[4]]));
        assert_eq!(g.compose(&Matrix::identity(2)).unwrap(), g);
        assert_eq!(Matrix::identity(2).compose(&g).unwrap(), g);
        assert_eq!(trop(&[&[1, 3]]).compose(&trop(&[&[2], &[0]])).unwrap(), trop(&[&[3]]));
        assert!(matches!(h.compose(&h), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn structural_maps() {
        assert_eq!(Matrix::<Nat>::coproj1(2, 1), nat(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(Matrix::<Nat>::coproj2(2, 1), nat(&[&[0, 0, 1]]));
        let p1k1 = Matrix::<Nat>::coproj1(2, 1).compose(&Matrix::proj1(2, 1)).unwrap();
        assert_eq!(p1k1, Matrix::identity(2));
        let p2k1 = Matrix::<Nat>::coproj1(2, 1).compose(&Matrix::proj2(2, 1)).unwrap();
        assert_eq!(p2k1, Matrix::zero(2, 1));
        let two = nat(&[&[2]]);
        let three = nat(&[&[3]]);
        let ct = mat_structural(Structural::Cotuple(&two, &three)).unwrap();
        assert_eq!(ct, nat(&[&[2], &[3]]));
        assert_eq!(Matrix::coproj1(1, 1).compose(&ct).unwrap(), two);
        assert_eq!(Matrix::coproj2(1, 1).compose(&ct).unwrap(), three);
        assert!(Matrix::tuple(&nat(&[&[1]]), &nat(&[&[1], &[2]])).is_err());
    }

    #[test]
    fn coordinates() {
        assert_eq!(coord_split(2, 3, 4).unwrap(), (1, 1));
        assert_eq!(coord_join(2, 3, 1, 1).unwrap(), 4);
        assert_eq!(coord_split(5, 1, 3).unwrap(), (3, 0));
        assert_eq!(coord_split(2, 3, 6), Err(Error::IndexOutOfRange { index: 6, bound: 6 }));
        assert!(coord_join(2, 3, 2, 0).is_err());
    }

    #[test]
    fn tensor_examples() {
        let s = nat(&[&[2]]);
        let t = nat(&[&[5]]);
        assert_eq!(Matrix::tensor(&s, &t), nat(&[&[10]]));
        let g = nat(&[&[1, 2]]);
        let h = nat(&[&[3], &[4]]);
        // Rows indexed by (i0, i1) ∈ 1×2, columns by (j0, j1) ∈ 2×1.
        let mut oracle = vec![vec![Nat::new(0); 2]; 2];
        for i1 in 0..2 {
            for j0 in 0..2 {
                oracle[i1][j0] = Nat::new([1, 2][j0] * [3, 4][i1]);
            }
        }
        assert_eq!(Matrix::tensor(&g, &h), Matrix::from_rows(oracle).unwrap());
        assert_eq!(Matrix::tensor(&g, &Matrix::identity(1)), g);
    }

    #[test]
    fn dagger_is_conjugate_transpose() {
        let g = |s: &str| s.parse::<GaussianRational>().unwrap();
        let f = Matrix::from_rows(vec![vec![g("i"), g("0")], vec![g("1"), g("2i")]]).unwrap();
        let expected = Matrix::from_rows(vec![vec![g("-i"), g("1")], vec![g("0"), g("-2i")]]).unwrap();
        assert_eq!(f.dagger(), expected);
        assert_eq!(f.dagger().dagger(), f);
    }

    #[test]
    fn homset_addition_is_entrywise_for_matrices() {
        let f = nat(&[&[1, 2], &[3, 4]]);
        let g = nat(&[&[5, 0], &[1, 1]]);
        assert_eq!(Matrix::homset_add(&f, &g).unwrap(), nat(&[&[6, 2], &[4, 5]]));
    }

    proptest! {
        #[test]
        fn split_and_join_are_inverse(n in 1usize..6, m in 1usize..6, c in 0usize..36) {
            prop_assume!(c < n * m);
            let (a, b) = coord_split(n, m, c).unwrap();
            prop_assert!(b < m && a < n);
            prop_assert_eq!(coord_join(n, m, a, b).unwrap(), c);
        }

        #[test]
        fn composition_is_associative(
            a in proptest::collection::vec(0u64..5, 6),
            b in proptest::collection::vec(0u64..5, 6),
            c in proptest::collection::vec(0u64..5, 4),
        ) {
            let a = Matrix::new(2, 3, a.into_iter().map(Nat::new).collect()).unwrap();
            let b = Matrix::new(3, 2, b.into_iter().map(Nat::new).collect()).unwrap();
            let c = Matrix::new(2, 2, c.into_iter().map(Nat::new).collect()).unwrap();
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
