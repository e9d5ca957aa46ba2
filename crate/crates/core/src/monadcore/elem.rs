//! A universal, totally ordered encoding of elements of finite sets.
//!
//! Elements of `X × Y`, `X + Y`, `1` and `T(X)` are all `Elem`s, so nested
//! constructions such as `T(T(X))` and `T(X × T(Y))` are representable with
//! canonical keys. Values of any monad are embedded through [`Elem::val`].

use std::any::Any;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A value that can be embedded in an [`Elem`].
///
/// Blanket-implemented for every ordered, printable, thread-safe type. Values
/// of different types are ordered by type name, values of the same type by
/// their own order.
pub trait ElemValue: Any + Send + Sync + fmt::Display + fmt::Debug {
    fn as_any(&self) -> &dyn Any;
    fn type_key(&self) -> &'static str;
    fn cmp_dyn(&self, other: &dyn ElemValue) -> Ordering;
}

impl<T: Any + Send + Sync + Ord + fmt::Display + fmt::Debug> ElemValue for T {
    fn as_any(&self) -> &dyn Any {
        self
    }

    fn type_key(&self) -> &'static str {
        std::any::type_name::<T>()
    }

    fn cmp_dyn(&self, other: &dyn ElemValue) -> Ordering {
        match other.as_any().downcast_ref::<T>() {
            Some(o) => self.cmp(o),
            None => self.type_key().cmp(other.type_key()),
        }
    }
}

/// An embedded monad value inside an [`Elem`].
#[derive(Clone)]
pub struct Embedded(Arc<dyn ElemValue>);

impl Embedded {
    pub fn downcast<T: 'static>(&self) -> Option<&T> {
        self.0.as_any().downcast_ref::<T>()
    }

    pub fn type_key(&self) -> &'static str {
        self.0.type_key()
    }
}

impl PartialEq for Embedded {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Embedded {}

impl PartialOrd for Embedded {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Embedded {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_dyn(&*other.0)
    }
}

impl fmt::Debug for Embedded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of a finite set built from atoms, `1`, products, sums and
/// embedded monad values. Ordered lexicographically by constructor first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Elem {
    /// The element `i` of the set `{0, …, n−1}`.
    Idx(usize),
    /// A named atom.
    Sym(Arc<str>),
    /// The unique element of the one-point set.
    Star,
    Pair(Arc<Elem>, Arc<Elem>),
    Inl(Arc<Elem>),
    Inr(Arc<Elem>),
    Val(Embedded),
}

impl Elem {
    pub fn sym(name: &str) -> Elem {
        Elem::Sym(Arc::from(name))
    }

    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Arc::new(a), Arc::new(b))
    }

    pub fn inl(a: Elem) -> Elem {
        Elem::Inl(Arc::new(a))
    }

    pub fn inr(b: Elem) -> Elem {
        Elem::Inr(Arc::new(b))
    }

    pub fn val<T: ElemValue>(value: T) -> Elem {
        Elem::Val(Embedded(Arc::new(value)))
    }

    pub fn downcast<T: 'static>(&self) -> Option<&T> {
        match self {
            Elem::Val(e) => e.downcast(),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Elem, &Elem)> {
        match self {
            Elem::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_idx(&self) -> Option<usize> {
        match self {
            Elem::Idx(i) => Some(*i),
            _ => None,
        }
    }

    /// The symmetry `γ: X × Y → Y × X`; `None` on non-pairs.
    pub fn swapped(&self) -> Option<Elem> {
        self.as_pair().map(|(a, b)| Elem::pair(b.clone(), a.clone()))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Idx(i) => write!(f, "{i}"),
            Elem::Sym(s) => f.write_str(s),
            Elem::Star => f.write_str("star"),
            Elem::Pair(a, b) => write!(f, "({a},{b})"),
            Elem::Inl(a) => write!(f, "inl {a}"),
            Elem::Inr(b) => write!(f, "inr {b}"),
            Elem::Val(v) => write!(f, "{}", v.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        let e = Elem::inl(Elem::pair(Elem::sym("a"), Elem::Star));
        assert_eq!(e.to_string(), "inl (a,star)");
        assert_eq!(Elem::inr(Elem::Idx(3)).to_string(), "inr 3");
    }

    #[test]
    fn order_is_total_across_embedded_types() {
        let a = Elem::val(3u32);
        let b = Elem::val(String::from("x"));
        let c = Elem::val(5u32);
        assert_ne!(a.cmp(&b), Ordering::Equal);
        assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        assert!(a < c);
        assert_eq!(a, Elem::val(3u32));
        assert_eq!(a.downcast::<u32>(), Some(&3));
        assert_eq!(a.downcast::<String>(), None);
    }

    #[test]
    fn constructor_order() {
        assert!(Elem::Idx(9) < Elem::sym("a"));
        assert!(Elem::sym("z") < Elem::Star);
        assert!(Elem::inl(Elem::Idx(5)) < Elem::inr(Elem::Idx(0)));
    }
}
