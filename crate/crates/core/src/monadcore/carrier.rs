//! Finite carriers and explicit maps between them.

use std::collections::BTreeMap;
use std::fmt;

use super::elem::Elem;
use crate::error::{Error, Result};

/// A finite set: a strictly sorted list of distinct elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct FiniteCarrier(Vec<Elem>);

impl FiniteCarrier {
    pub fn new(elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut v: Vec<Elem> = elems.into_iter().collect();
        v.sort();
        v.dedup();
        FiniteCarrier(v)
    }

    pub fn empty() -> Self {
        FiniteCarrier(Vec::new())
    }

    /// The one-point set `1 = {★}`.
    pub fn one() -> Self {
        FiniteCarrier(vec![Elem::Star])
    }

    /// The set `{0, …, n−1}`.
    pub fn range(n: usize) -> Self {
        FiniteCarrier((0..n).map(Elem::Idx).collect())
    }

    pub fn symbols(names: &[&str]) -> Self {
        Self::new(names.iter().map(|n| Elem::sym(n)))
    }

    /// The disjoint union `X + Y` with `inl`/`inr` tags.
    pub fn sum(x: &FiniteCarrier, y: &FiniteCarrier) -> Self {
        Self::new(x.iter().map(|a| Elem::inl(a.clone())).chain(y.iter().map(|b| Elem::inr(b.clone()))))
    }

    pub fn product(x: &FiniteCarrier, y: &FiniteCarrier) -> Self {
        Self::new(x.iter().flat_map(|a| y.iter().map(move |b| Elem::pair(a.clone(), b.clone()))))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Elem> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: &Elem) -> bool {
        self.0.binary_search(x).is_ok()
    }

    pub fn is_subset(&self, other: &FiniteCarrier) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn elems(&self) -> &[Elem] {
        &self.0
    }
}

impl fmt::Display for FiniteCarrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// A function between finite sets given by an explicit table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CarrierMap {
    table: BTreeMap<Elem, Elem>,
}

impl CarrierMap {
    pub fn from_table(pairs: impl IntoIterator<Item = (Elem, Elem)>) -> Self {
        CarrierMap { table: pairs.into_iter().collect() }
    }

    /// Tabulates `f` over `domain`.
    pub fn from_fn(domain: &FiniteCarrier, f: impl Fn(&Elem) -> Elem) -> Self {
        Self::from_table(domain.iter().map(|x| (x.clone(), f(x))))
    }

    pub fn try_from_fn(domain: &FiniteCarrier, f: impl Fn(&Elem) -> Result<Elem>) -> Result<Self> {
        let table = domain.iter().map(|x| Ok((x.clone(), f(x)?))).collect::<Result<_>>()?;
        Ok(CarrierMap { table })
    }

    pub fn identity(domain: &FiniteCarrier) -> Self {
        Self::from_fn(domain, Elem::clone)
    }

    /// The unique map out of the empty set.
    pub fn empty() -> Self {
        CarrierMap { table: BTreeMap::new() }
    }

    pub fn apply(&self, x: &Elem) -> Result<Elem> {
        self.table
            .get(x)
            .cloned()
            .ok_or_else(|| Error::ElementOutsideCarrier(x.to_string()))
    }

    pub fn domain(&self) -> FiniteCarrier {
        FiniteCarrier(self.table.keys().cloned().collect())
    }

    pub fn image(&self) -> FiniteCarrier {
        FiniteCarrier::new(self.table.values().cloned())
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &CarrierMap) -> Result<CarrierMap> {
        let table = self
            .table
            .iter()
            .map(|(x, y)| Ok((x.clone(), then.apply(y)?)))
            .collect::<Result<_>>()?;
        Ok(CarrierMap { table })
    }

    /// Checks that every image lies in `codomain`.
    pub fn check_codomain(&self, codomain: &FiniteCarrier) -> Result<()> {
        match self.table.values().find(|y| !codomain.contains(y)) {
            Some(y) => Err(Error::ElementOutsideCarrier(y.to_string())),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carriers_are_sorted_sets() {
        let c = FiniteCarrier::new([Elem::Idx(2), Elem::Idx(0), Elem::Idx(2)]);
        assert_eq!(c.elems(), &[Elem::Idx(0), Elem::Idx(2)]);
        assert_eq!(FiniteCarrier::sum(&FiniteCarrier::range(2), &FiniteCarrier::one()).len(), 3);
        assert_eq!(FiniteCarrier::product(&FiniteCarrier::range(2), &FiniteCarrier::range(3)).len(), 6);
        assert_eq!(FiniteCarrier::symbols(&["b", "a"]).to_string(), "{a, b}");
    }

    #[test]
    fn maps_reject_elements_outside_their_domain() {
        let f = CarrierMap::from_fn(&FiniteCarrier::range(2), |x| Elem::pair(x.clone(), Elem::Star));
        assert_eq!(f.apply(&Elem::Idx(1)).unwrap().to_string(), "(1,star)");
        assert_eq!(f.apply(&Elem::Idx(5)), Err(Error::ElementOutsideCarrier("5".into())));
        assert!(f.check_codomain(&FiniteCarrier::range(2)).is_err());
    }
}
