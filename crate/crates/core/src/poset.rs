use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::Elem;

/// A finite partial order over named elements.
///
/// The input order of the element names is the canonical order used for
/// every tie-break in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    // row-major, leq[a * n + b] == (a <= b)
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Builds a poset from element names and any generating set of `a <= b`
    /// pairs; the reflexive-transitive closure is computed here.
    pub fn new<S: AsRef<str>>(elements: &[S], leq_pairs: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_names(&names)?;
        let n = names.len();
        let mut leq = vec![false; n * n];
        for (a, b) in leq_pairs {
            let a = lookup(&index, a.as_ref())?;
            let b = lookup(&index, b.as_ref())?;
            leq[a * n + b] = true;
        }
        Self::from_relation(names, index, leq)
    }

    pub(crate) fn from_matrix(names: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let index = index_names(&names)?;
        Self::from_relation(names, index, leq)
    }

    /// Skips closure and antisymmetry checks; `leq` must already be a
    /// partial order.
    pub(crate) fn from_order_unchecked(names: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let index = index_names(&names)?;
        Ok(FinitePoset { names, index, leq })
    }

    fn from_relation(
        names: Vec<String>,
        index: HashMap<String, usize>,
        mut leq: Vec<bool>,
    ) -> Result<Self> {
        let n = names.len();
        debug_assert_eq!(leq.len(), n * n);
        for a in 0..n {
            leq[a * n + a] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if leq[a * n + b] && leq[b * n + a] {
                    return Err(Error::NotAPoset(names[a].clone(), names[b].clone()));
                }
            }
        }
        Ok(FinitePoset { names, index, leq })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn position(&self, name: &str) -> Option<Elem> {
        self.index.get(name).copied().map(Elem)
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.0 * self.names.len() + b.0]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.names.len()).map(Elem)
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between them.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = self
                    .elements()
                    .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<String, usize>, name: &str) -> Result<usize> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| Error::UnknownElement(name.to_owned()))
}
