//! Ideal elements of the entailment relation, i.e. the homomorphisms
//! `L → B`, enumerated exhaustively.
//!
//! A hom into `B` is determined by its composites with the projections
//! `B → 2` at each atom, and each of those is the characteristic function
//! of a prime filter `↑j` for a join-irreducible `j`. Enumeration walks
//! these per-atom choices and assembles the product.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::boolean::BooleanAlgebra;
use crate::engine::{EntailmentContext, Sequent, Statement, StatementSet};
use crate::error::Result;
use crate::hom::{check_hom, Embedding, Flavor, LatticeHom};
use crate::lattice::{DistributiveLattice, Elem};

/// A hom `L → B` together with its graph `{(x, α(x))}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealElement {
    pub hom: LatticeHom,
    pub graph: StatementSet,
}

impl IdealElement {
    pub fn new(hom: LatticeHom) -> Self {
        let graph = hom
            .domain()
            .elements()
            .map(|x| Statement::new(x, hom.apply(x)))
            .collect();
        IdealElement { hom, graph }
    }

    /// `X ⊆ graph`.
    pub fn satisfies(&self, set: &StatementSet) -> bool {
        set.iter().all(|s| self.hom.apply(s.x) == s.a)
    }

    /// `graph ∩ Y ≠ ∅`.
    pub fn meets(&self, set: &StatementSet) -> bool {
        set.iter().any(|s| self.hom.apply(s.x) == s.a)
    }
}

/// Homs `L → 2` as 0/1 labelings, one per join-irreducible, filtered by
/// the preservation laws of `flavor`.
pub fn two_valued_homs(l: &DistributiveLattice, flavor: Flavor) -> Vec<Vec<bool>> {
    l.irreducibles()
        .iter()
        .map(|&j| l.elements().map(|x| l.leq(j, x)).collect::<Vec<bool>>())
        .filter(|f| preserves_two_valued(l, f, flavor))
        .collect()
}

fn preserves_two_valued(l: &DistributiveLattice, f: &[bool], flavor: Flavor) -> bool {
    if f[l.bottom().0] || !f[l.top().0] {
        return false;
    }
    l.elements().all(|x| {
        l.elements().all(|y| {
            let (p, q) = (f[x.0], f[y.0]);
            f[l.meet(x, y).0] == (p && q)
                && f[l.join(x, y).0] == (p || q)
                && (flavor == Flavor::Lattice || f[l.implies(x, y).0] == (!p || q))
        })
    })
}

/// All ideal elements of `ctx`, ordered by their tables.
pub fn enumerate_homs(ctx: &EntailmentContext) -> Result<Vec<IdealElement>> {
    let l = &ctx.lattice;
    let b = &ctx.algebra;
    let per_atom = two_valued_homs(l, ctx.flavor);
    let n_atoms = b.atoms().len();
    let mut out = Vec::new();
    if per_atom.is_empty() {
        return Ok(out);
    }
    // odometer over per-atom choices
    let mut choice = vec![0usize; n_atoms];
    loop {
        let table: Vec<Elem> = l
            .elements()
            .map(|x| {
                let mask = choice
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| per_atom[c][x.0])
                    .fold(0u64, |m, (i, _)| m | 1 << i);
                b.from_mask(mask).expect("every atom set names an element")
            })
            .collect();
        out.push(IdealElement::new(check_hom(
            table,
            l,
            b.lattice(),
            ctx.flavor,
        )?));

        let mut i = 0;
        while i < n_atoms {
            choice[i] += 1;
            if choice[i] < per_atom.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == n_atoms {
            break;
        }
    }
    out.sort_by(|p, q| p.hom.table().cmp(q.hom.table()));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticVerdict {
    pub holds: bool,
    pub countermodel: Option<IdealElement>,
}

/// The enumerated models of one context, reusable across many queries.
#[derive(Debug, Clone)]
pub struct Models {
    ctx: EntailmentContext,
    homs: Vec<IdealElement>,
}

impl Models {
    pub fn new(ctx: &EntailmentContext) -> Result<Self> {
        Ok(Models {
            ctx: ctx.clone(),
            homs: enumerate_homs(ctx)?,
        })
    }

    pub fn homs(&self) -> &[IdealElement] {
        &self.homs
    }

    pub fn context(&self) -> &EntailmentContext {
        &self.ctx
    }

    /// Every model containing the antecedent meets the succedent.
    pub fn entails(&self, seq: &Sequent) -> Result<SemanticVerdict> {
        self.ctx.check(&seq.antecedent)?;
        self.ctx.check(&seq.succedent)?;
        let countermodel = self
            .homs
            .iter()
            .find(|m| m.satisfies(&seq.antecedent) && !m.meets(&seq.succedent))
            .cloned();
        Ok(SemanticVerdict {
            holds: countermodel.is_none(),
            countermodel,
        })
    }
}

pub fn semantic_entails(ctx: &EntailmentContext, seq: &Sequent) -> Result<SemanticVerdict> {
    Models::new(ctx)?.entails(seq)
}

/// Restricts every hom `L' → B` along `embedding` and reports whether all
/// homs `L → B` arise that way.
pub fn restriction_is_surjective(
    embedding: &Embedding,
    algebra: &Arc<BooleanAlgebra>,
    flavor: Flavor,
) -> Result<bool> {
    let big = EntailmentContext::new(
        Arc::clone(embedding.codomain()),
        Arc::clone(algebra),
        flavor,
    );
    let small = EntailmentContext::new(Arc::clone(embedding.domain()), Arc::clone(algebra), flavor);
    let restricted: BTreeSet<Vec<Elem>> = enumerate_homs(&big)?
        .iter()
        .map(|m| {
            embedding
                .domain()
                .elements()
                .map(|x| m.hom.apply(embedding.apply(x)))
                .collect()
        })
        .collect();
    Ok(enumerate_homs(&small)?
        .iter()
        .all(|m| restricted.contains(m.hom.table())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::BooleanAlgebra;
    use crate::catalog;

    fn ctx(l: DistributiveLattice, atoms: usize, flavor: Flavor) -> EntailmentContext {
        EntailmentContext::new(
            Arc::new(l),
            Arc::new(BooleanAlgebra::powerset(atoms).unwrap()),
            flavor,
        )
    }

    fn rendered(c: &EntailmentContext) -> Vec<String> {
        enumerate_homs(c)
            .unwrap()
            .iter()
            .map(|m| m.hom.render())
            .collect()
    }

    #[test]
    fn counts_and_order() {
        assert_eq!(
            rendered(&ctx(catalog::c3(), 1, Flavor::Lattice)),
            vec!["0->0 m->0 1->e1", "0->0 m->e1 1->e1"]
        );
        assert_eq!(
            rendered(&ctx(catalog::square(), 1, Flavor::Lattice)),
            vec!["0->0 a->0 b->e1 1->e1", "0->0 a->e1 b->0 1->e1"]
        );
        assert_eq!(
            rendered(&ctx(catalog::c3(), 1, Flavor::Heyting)),
            vec!["0->0 m->e1 1->e1"]
        );
        assert_eq!(rendered(&ctx(catalog::c3(), 2, Flavor::Lattice)).len(), 4);
        assert!(rendered(&ctx(catalog::trivial(), 1, Flavor::Lattice)).is_empty());
    }

    #[test]
    fn semantic_examples() {
        let c = ctx(catalog::c3(), 1, Flavor::Lattice);
        let models = Models::new(&c).unwrap();
        let s = |x, y| Sequent::new(c.statements(x).unwrap(), c.statements(y).unwrap());
        assert!(
            models
                .entails(&s(&[("m", "e1")], &[("1", "e1")]))
                .unwrap()
                .holds
        );
        let v = models.entails(&s(&[("1", "e1")], &[("m", "e1")])).unwrap();
        assert!(!v.holds);
        assert_eq!(v.countermodel.unwrap().hom.render(), "0->0 m->0 1->e1");
        let x = c.statements(&[("m", "0")]).unwrap();
        assert!(models.entails(&Sequent::new(x.clone(), x)).unwrap().holds);
    }
}
