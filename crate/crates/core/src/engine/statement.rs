use std::collections::BTreeSet;
use std::fmt;

use crate::lattice::Elem;

/// The assertion "φ(x) = a" about a generic lattice map φ: L → B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Statement {
    /// Element of the lattice.
    pub x: Elem,
    /// Element of the Boolean algebra.
    pub a: Elem,
}

impl Statement {
    pub fn new(x: Elem, a: Elem) -> Self {
        Statement { x, a }
    }
}

impl From<(Elem, Elem)> for Statement {
    fn from((x, a): (Elem, Elem)) -> Self {
        Statement { x, a }
    }
}

/// A finite, duplicate-free set of statements in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StatementSet(BTreeSet<Statement>);

impl StatementSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, s: Statement) -> bool {
        self.0.insert(s)
    }

    pub fn remove(&mut self, s: &Statement) -> bool {
        self.0.remove(s)
    }

    pub fn contains(&self, s: &Statement) -> bool {
        self.0.contains(s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Statement> + Clone {
        self.0.iter()
    }

    pub fn union(&self, other: &StatementSet) -> StatementSet {
        StatementSet(self.0.union(&other.0).copied().collect())
    }

    pub fn with(&self, s: Statement) -> StatementSet {
        let mut out = self.clone();
        out.insert(s);
        out
    }

    pub fn is_subset(&self, other: &StatementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn meets(&self, other: &StatementSet) -> bool {
        self.0.intersection(&other.0).next().is_some()
    }
}

impl FromIterator<Statement> for StatementSet {
    fn from_iter<I: IntoIterator<Item = Statement>>(iter: I) -> Self {
        StatementSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a StatementSet {
    type Item = &'a Statement;
    type IntoIter = std::collections::btree_set::Iter<'a, Statement>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// `antecedent ⊢ succedent`, read conjunctively on the left and
/// disjunctively on the right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub antecedent: StatementSet,
    pub succedent: StatementSet,
}

impl Sequent {
    pub fn new(antecedent: StatementSet, succedent: StatementSet) -> Self {
        Sequent {
            antecedent,
            succedent,
        }
    }

    /// `X ⊢` with empty succedent.
    pub fn inconsistency(antecedent: StatementSet) -> Self {
        Sequent {
            antecedent,
            succedent: StatementSet::new(),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.a)
    }
}
