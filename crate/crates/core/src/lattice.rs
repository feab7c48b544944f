//! Finite distributive lattices with explicit operation tables.
//!
//! Every finite distributive lattice is a Heyting algebra, so the
//! implication table is computed eagerly alongside meet and join.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// Index of an element in its carrier, in canonical (input) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A validated, bounded, finite distributive lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributiveLattice {
    name: String,
    poset: FinitePoset,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    implies: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    irreducibles: Vec<Elem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderOp {
    Leq,
    Meet,
    Join,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryValue {
    Bool(bool),
    Elem(Elem),
}

/// Validates `elements` under the order generated by `leq_pairs`.
pub fn build_lattice<S: AsRef<str>>(
    elements: &[S],
    leq_pairs: &[(S, S)],
) -> Result<DistributiveLattice> {
    DistributiveLattice::from_poset(FinitePoset::new(elements, leq_pairs)?)
}

impl DistributiveLattice {
    pub fn from_poset(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut meet = vec![Elem(0); n * n];
        let mut join = vec![Elem(0); n * n];
        for x in poset.elements() {
            for y in poset.elements() {
                if y < x {
                    meet[x.0 * n + y.0] = meet[y.0 * n + x.0];
                    join[x.0 * n + y.0] = join[y.0 * n + x.0];
                    continue;
                }
                let glb = extremal_bound(&poset, x, y, true).ok_or_else(|| {
                    Error::NotALattice(
                        poset.name(x).into(),
                        poset.name(y).into(),
                        "greatest lower bound",
                    )
                })?;
                let lub = extremal_bound(&poset, x, y, false).ok_or_else(|| {
                    Error::NotALattice(
                        poset.name(x).into(),
                        poset.name(y).into(),
                        "least upper bound",
                    )
                })?;
                meet[x.0 * n + y.0] = glb;
                join[x.0 * n + y.0] = lub;
            }
        }
        let bottom = poset
            .elements()
            .find(|&b| poset.elements().all(|x| poset.leq(b, x)))
            .ok_or(Error::Internal("finite lattice without bottom".into()))?;
        let top = poset
            .elements()
            .find(|&t| poset.elements().all(|x| poset.leq(x, t)))
            .ok_or(Error::Internal("finite lattice without top".into()))?;

        let at = |t: &Vec<Elem>, a: Elem, b: Elem| t[a.0 * n + b.0];
        for x in poset.elements() {
            for y in poset.elements() {
                for z in poset.elements() {
                    let lhs = at(&meet, x, at(&join, y, z));
                    let rhs = at(&join, at(&meet, x, y), at(&meet, x, z));
                    if lhs != rhs {
                        return Err(Error::NotDistributive(
                            poset.name(x).into(),
                            poset.name(y).into(),
                            poset.name(z).into(),
                        ));
                    }
                }
            }
        }

        let mut implies = vec![Elem(0); n * n];
        for x in poset.elements() {
            for y in poset.elements() {
                let mut acc = bottom;
                for z in poset.elements() {
                    if poset.leq(at(&meet, z, x), y) {
                        acc = at(&join, acc, z);
                    }
                }
                implies[x.0 * n + y.0] = acc;
            }
        }

        Ok(Self::assemble(poset, meet, join, implies, bottom, top))
    }

    /// Assembles a lattice whose tables are correct by construction.
    pub(crate) fn from_tables(
        poset: FinitePoset,
        meet: Vec<Elem>,
        join: Vec<Elem>,
        implies: Vec<Elem>,
        bottom: Elem,
        top: Elem,
    ) -> Self {
        Self::assemble(poset, meet, join, implies, bottom, top)
    }

    fn assemble(
        poset: FinitePoset,
        meet: Vec<Elem>,
        join: Vec<Elem>,
        implies: Vec<Elem>,
        bottom: Elem,
        top: Elem,
    ) -> Self {
        let mut lattice = DistributiveLattice {
            name: String::new(),
            poset,
            meet,
            join,
            implies,
            bottom,
            top,
            irreducibles: Vec::new(),
        };
        lattice.irreducibles = lattice
            .elements()
            .filter(|&x| {
                x != bottom
                    && lattice.join_all(lattice.elements().filter(|&y| y != x && lattice.leq(y, x)))
                        != x
            })
            .collect();
        lattice
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `1 = 0`: the one-element lattice.
    pub fn is_degenerate(&self) -> bool {
        self.bottom == self.top
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone + '_ {
        (0..self.len()).map(Elem)
    }

    pub fn elem_name(&self, e: Elem) -> &str {
        self.poset.name(e)
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.poset
            .position(name)
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    pub fn contains(&self, e: Elem) -> bool {
        e.0 < self.len()
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.0 * self.len() + b.0]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.0 * self.len() + b.0]
    }

    /// Heyting implication: the largest `z` with `z /\ a <= b`.
    #[inline]
    pub fn implies(&self, a: Elem, b: Elem) -> Elem {
        self.implies[a.0 * self.len() + b.0]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.implies(a, self.bottom)
    }

    pub fn double_neg(&self, a: Elem) -> Elem {
        self.neg(self.neg(a))
    }

    /// Meet of a finite family; the empty meet is top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a finite family; the empty join is bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn order_query(&self, op: OrderOp, x: &str, y: &str) -> Result<QueryValue> {
        let (x, y) = (self.elem(x)?, self.elem(y)?);
        Ok(match op {
            OrderOp::Leq => QueryValue::Bool(self.leq(x, y)),
            OrderOp::Meet => QueryValue::Elem(self.meet(x, y)),
            OrderOp::Join => QueryValue::Elem(self.join(x, y)),
        })
    }

    pub fn heyting_implication(&self, x: &str, y: &str) -> Result<Elem> {
        Ok(self.implies(self.elem(x)?, self.elem(y)?))
    }

    /// Join-irreducible elements in canonical order.
    pub fn irreducibles(&self) -> &[Elem] {
        &self.irreducibles
    }

    /// The join-irreducibles below `x`; `x` is their join.
    pub fn downset(&self, x: Elem) -> Vec<Elem> {
        self.irreducibles
            .iter()
            .copied()
            .filter(|&j| self.leq(j, x))
            .collect()
    }

    /// First element without a complement, in canonical order.
    pub fn first_uncomplemented(&self) -> Option<Elem> {
        self.elements().find(|&d| self.complement_of(d).is_none())
    }

    pub fn complement_of(&self, d: Elem) -> Option<Elem> {
        self.elements()
            .find(|&c| self.meet(d, c) == self.bottom && self.join(d, c) == self.top)
    }

    pub fn is_complemented(&self) -> bool {
        self.first_uncomplemented().is_none()
    }

    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        self.poset.covers()
    }
}

// Greatest lower bound (or least upper bound) of x and y, if it exists.
fn extremal_bound(poset: &FinitePoset, x: Elem, y: Elem, lower: bool) -> Option<Elem> {
    let is_bound = |z: Elem| {
        if lower {
            poset.leq(z, x) && poset.leq(z, y)
        } else {
            poset.leq(x, z) && poset.leq(y, z)
        }
    };
    let bounds: Vec<Elem> = poset.elements().filter(|&z| is_bound(z)).collect();
    bounds.iter().copied().find(|&c| {
        bounds.iter().all(|&z| {
            if lower {
                poset.leq(z, c)
            } else {
                poset.leq(c, z)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> DistributiveLattice {
        build_lattice(&["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap()
    }

    fn sq() -> DistributiveLattice {
        build_lattice(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap()
    }

    fn lam() -> DistributiveLattice {
        build_lattice(
            &["0", "u", "v", "w", "1"],
            &[("0", "u"), ("0", "v"), ("u", "w"), ("v", "w"), ("w", "1")],
        )
        .unwrap()
    }

    #[test]
    fn c3_queries() {
        let l = c3();
        let name = |q| match q {
            QueryValue::Elem(e) => l.elem_name(e).to_owned(),
            QueryValue::Bool(b) => b.to_string(),
        };
        assert_eq!(name(l.order_query(OrderOp::Meet, "m", "1").unwrap()), "m");
        assert_eq!(
            name(l.order_query(OrderOp::Leq, "1", "m").unwrap()),
            "false"
        );
        assert_eq!(
            l.order_query(OrderOp::Join, "m", "q").unwrap_err(),
            Error::UnknownElement("q".into())
        );
    }

    #[test]
    fn square_join_of_midpoints_is_top() {
        let l = sq();
        assert_eq!(
            l.order_query(OrderOp::Join, "a", "b").unwrap(),
            QueryValue::Elem(l.top())
        );
    }

    #[test]
    fn pentagon_and_diamond_are_rejected() {
        let n5 = build_lattice(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        );
        assert!(matches!(n5, Err(Error::NotDistributive(..))));
        let m3 = build_lattice(
            &["0", "a", "b", "c", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "1"),
                ("b", "1"),
                ("c", "1"),
            ],
        );
        assert!(matches!(m3, Err(Error::NotDistributive(..))));
    }

    #[test]
    fn missing_bounds_is_not_a_lattice() {
        let err = build_lattice(&["a", "b"], &[]).unwrap_err();
        assert!(matches!(err, Error::NotALattice(..)));
        assert_eq!(
            build_lattice::<&str>(&[], &[]).unwrap_err(),
            Error::EmptyCarrier
        );
    }

    #[test]
    fn one_element_lattice_is_accepted() {
        let l = build_lattice(&["0"], &[]).unwrap();
        assert!(l.is_degenerate());
        assert!(l.irreducibles().is_empty());
    }

    #[test]
    fn implication_examples() {
        let l = c3();
        let m = l.elem("m").unwrap();
        assert_eq!(l.heyting_implication("m", "0").unwrap(), l.bottom());
        assert_eq!(l.neg(m), l.bottom());
        for y in l.elements() {
            assert_eq!(l.implies(l.top(), y), y);
        }
    }

    #[test]
    fn lam_negations() {
        let l = lam();
        let e = |n| l.elem(n).unwrap();
        assert_eq!(l.neg(e("u")), e("v"));
        assert_eq!(l.neg(e("v")), e("u"));
        assert_eq!(l.neg(e("w")), e("0"));
        assert_eq!(l.double_neg(e("w")), e("1"));
        assert_eq!(l.irreducibles(), &[e("u"), e("v"), e("1")]);
        assert_eq!(l.first_uncomplemented(), Some(e("u")));
    }

    #[test]
    fn complement_detection() {
        assert!(sq().is_complemented());
        let l = c3();
        assert_eq!(l.first_uncomplemented(), l.elem("m").ok());
    }
}
