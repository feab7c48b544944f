//! Finite Boolean algebras, presented by their atoms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{DistributiveLattice, Elem};
use crate::poset::FinitePoset;

/// Largest atom count accepted by [`BooleanAlgebra::powerset`].
pub const MAX_ATOMS: usize = 8;

/// A finite Boolean algebra: a complemented distributive lattice together
/// with its atoms.
///
/// For `powerset:N` algebras the element index is the atom bitmask, so
/// the canonical element order is `0, e1, e2, e1+e2, e3, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanAlgebra {
    lattice: Arc<DistributiveLattice>,
    atoms: Vec<Elem>,
    complement: Vec<Elem>,
    // bit i of masks[a] is set iff atoms[i] <= a
    masks: Vec<u64>,
}

pub fn build_boolean_algebra(n_atoms: usize) -> Result<BooleanAlgebra> {
    BooleanAlgebra::powerset(n_atoms)
}

/// Canonical name of the atom set `mask`: `"0"` or `e<i>` joined by `+`.
pub fn powerset_name(mask: u64) -> String {
    if mask == 0 {
        return "0".to_owned();
    }
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| format!("e{}", i + 1))
        .collect::<Vec<_>>()
        .join("+")
}

impl BooleanAlgebra {
    pub fn powerset(n_atoms: usize) -> Result<Self> {
        if n_atoms == 0 {
            return Err(Error::ZeroAtoms);
        }
        if n_atoms > MAX_ATOMS {
            return Err(Error::TooManyAtoms(n_atoms, MAX_ATOMS));
        }
        let size = 1usize << n_atoms;
        let full = size - 1;
        let names: Vec<String> = (0..size as u64).map(powerset_name).collect();
        let mut leq = vec![false; size * size];
        let mut meet = vec![Elem(0); size * size];
        let mut join = vec![Elem(0); size * size];
        let mut implies = vec![Elem(0); size * size];
        for a in 0..size {
            for b in 0..size {
                let i = a * size + b;
                leq[i] = a & !b == 0;
                meet[i] = Elem(a & b);
                join[i] = Elem(a | b);
                implies[i] = Elem((!a & full) | b);
            }
        }
        let poset = FinitePoset::from_order_unchecked(names, leq)?;
        let lattice =
            DistributiveLattice::from_tables(poset, meet, join, implies, Elem(0), Elem(full))
                .with_name(format!("powerset:{n_atoms}"));
        Ok(BooleanAlgebra {
            lattice: Arc::new(lattice),
            atoms: (0..n_atoms).map(|i| Elem(1 << i)).collect(),
            complement: (0..size).map(|a| Elem(!a & full)).collect(),
            masks: (0..size as u64).collect(),
        })
    }

    /// Parses an algebra spec string of the form `powerset:N`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let n = spec
            .strip_prefix("powerset:")
            .and_then(|n| n.parse::<usize>().ok())
            .ok_or_else(|| {
                Error::Mismatch(format!("bad algebra spec `{spec}`, want powerset:N"))
            })?;
        Self::powerset(n)
    }

    /// Views a complemented distributive lattice as a Boolean algebra.
    pub fn from_lattice(lattice: DistributiveLattice) -> Result<Self> {
        if lattice.is_degenerate() {
            return Err(Error::ZeroAtoms);
        }
        if let Some(d) = lattice.first_uncomplemented() {
            return Err(Error::NotComplemented(lattice.elem_name(d).to_owned()));
        }
        let bottom = lattice.bottom();
        let atoms: Vec<Elem> = lattice
            .elements()
            .filter(|&a| {
                a != bottom
                    && lattice
                        .elements()
                        .all(|z| z == bottom || z == a || !lattice.leq(z, a))
            })
            .collect();
        if atoms.len() > 64 {
            return Err(Error::TooManyAtoms(atoms.len(), 64));
        }
        let complement = lattice
            .elements()
            .map(|d| lattice.complement_of(d).expect("complemented"))
            .collect();
        let masks = lattice
            .elements()
            .map(|x| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| lattice.leq(e, x))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        Ok(BooleanAlgebra {
            lattice: Arc::new(lattice),
            atoms,
            complement,
            masks,
        })
    }

    pub fn lattice(&self) -> &Arc<DistributiveLattice> {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone + '_ {
        self.lattice.elements()
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.lattice.elem(name)
    }

    pub fn elem_name(&self, a: Elem) -> &str {
        self.lattice.elem_name(a)
    }

    pub fn zero(&self) -> Elem {
        self.lattice.bottom()
    }

    pub fn one(&self) -> Elem {
        self.lattice.top()
    }

    /// Minimal non-zero elements, in canonical order.
    pub fn atoms(&self) -> &[Elem] {
        &self.atoms
    }

    pub fn complement(&self, a: Elem) -> Elem {
        self.complement[a.0]
    }

    /// Whether the `i`-th atom lies below `a`.
    #[inline]
    pub fn atom_below(&self, i: usize, a: Elem) -> bool {
        self.masks[a.0] >> i & 1 == 1
    }

    /// The set of atoms below `a`, as a bitmask over atom positions.
    pub fn atom_mask(&self, a: Elem) -> u64 {
        self.masks[a.0]
    }

    /// The element whose atoms are exactly `mask`.
    pub fn from_mask(&self, mask: u64) -> Option<Elem> {
        self.masks.iter().position(|&m| m == mask).map(Elem)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.meet(a, b)
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.join(a, b)
    }

    /// `a -> b`, which is `-a \/ b` here.
    pub fn implies(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.implies(a, b)
    }
}
