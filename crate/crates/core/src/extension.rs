//! Extending a hom `α: L → B` along an embedding `φ: L ↪ L'` by greedy
//! consistent value assignment.
//!
//! The graph of `α`, pushed along `φ`, seeds a consistent statement set
//! over `(L', B)`. Each element of `L'` outside the image of `φ` then
//! receives the first value of `B` that keeps the set consistent. For
//! Boolean `B` some value always fits, so the greedy pass never
//! backtracks and the final total set is the graph of a hom.

use std::sync::Arc;

use crate::boolean::BooleanAlgebra;
use crate::engine::{
    is_inconsistent, EntailmentContext, InconsistencyWitness, Statement, StatementSet,
};
use crate::error::{Error, Result};
use crate::hom::{check_hom, Embedding, Flavor, LatticeHom};
use crate::lattice::Elem;

#[derive(Debug, Clone)]
pub struct ExtensionProblem {
    embedding: Embedding,
    alpha: LatticeHom,
    algebra: Arc<BooleanAlgebra>,
}

impl ExtensionProblem {
    pub fn new(
        embedding: Embedding,
        alpha: LatticeHom,
        algebra: Arc<BooleanAlgebra>,
    ) -> Result<Self> {
        if **alpha.domain() != **embedding.domain() {
            return Err(Error::Mismatch(
                "hom domain differs from the embedded lattice".into(),
            ));
        }
        if **alpha.codomain() != **algebra.lattice() {
            return Err(Error::Mismatch(
                "hom codomain differs from the algebra".into(),
            ));
        }
        Ok(ExtensionProblem {
            embedding,
            alpha,
            algebra,
        })
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn alpha(&self) -> &LatticeHom {
        &self.alpha
    }

    pub fn algebra(&self) -> &Arc<BooleanAlgebra> {
        &self.algebra
    }
}

/// One greedy step: values refuted before `chosen` was accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionStep {
    pub element: Elem,
    pub rejected: Vec<(Elem, InconsistencyWitness)>,
    pub chosen: Elem,
}

#[derive(Debug, Clone)]
pub struct Extension {
    pub beta: LatticeHom,
    pub steps: Vec<ExtensionStep>,
}

pub fn sikorski_extend(problem: &ExtensionProblem) -> Result<Extension> {
    let emb = &problem.embedding;
    let big = Arc::clone(emb.codomain());
    let ctx = EntailmentContext::new(
        Arc::clone(&big),
        Arc::clone(&problem.algebra),
        Flavor::Lattice,
    );

    let mut values: Vec<Option<Elem>> = vec![None; big.len()];
    let mut set = StatementSet::new();
    for x in emb.domain().elements() {
        let (y, a) = (emb.apply(x), problem.alpha.apply(x));
        set.insert(Statement::new(y, a));
        values[y.0] = Some(a);
    }
    if let Some(w) = is_inconsistent(&ctx, &set)? {
        return Err(Error::InvalidSeed(format!(
            "atom {} gives {} <= {}",
            ctx.algebra.elem_name(w.atom),
            big.elem_name(w.lhs),
            big.elem_name(w.rhs)
        )));
    }

    let mut steps = Vec::new();
    for y in big.elements().filter(|&y| !emb.covers(y)) {
        let mut rejected = Vec::new();
        let mut chosen = None;
        for b in ctx.algebra.elements() {
            let candidate = set.with(Statement::new(y, b));
            match is_inconsistent(&ctx, &candidate)? {
                Some(w) => rejected.push((b, w)),
                None => {
                    set = candidate;
                    chosen = Some(b);
                    break;
                }
            }
        }
        let chosen = chosen.ok_or_else(|| Error::ExtensionStuck(big.elem_name(y).to_owned()))?;
        values[y.0] = Some(chosen);
        steps.push(ExtensionStep {
            element: y,
            rejected,
            chosen,
        });
    }

    let table: Vec<Elem> = values
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::Internal("extension left an element unassigned".into())))
        .collect::<Result<_>>()?;
    let beta = check_hom(table, &big, problem.algebra.lattice(), Flavor::Lattice)
        .map_err(|e| Error::Internal(format!("greedy extension is not a hom: {e}")))?;
    for x in emb.domain().elements() {
        if beta.apply(emb.apply(x)) != problem.alpha.apply(x) {
            return Err(Error::Internal(
                "extension does not restrict to the given hom".into(),
            ));
        }
    }
    Ok(Extension { beta, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hom::sublattice_by_names;

    fn b2() -> Arc<BooleanAlgebra> {
        Arc::new(BooleanAlgebra::powerset(1).unwrap())
    }

    #[test]
    fn two_chain_into_square() {
        let sq = Arc::new(catalog::square());
        let (sub, emb) = sublattice_by_names(&sq, &["0", "1"]).unwrap();
        let b = b2();
        let alpha = LatticeHom::from_names(
            &[("0", "0"), ("1", "e1")],
            &sub,
            b.lattice(),
            Flavor::Lattice,
        )
        .unwrap();
        let ext = sikorski_extend(&ExtensionProblem::new(emb, alpha, b).unwrap()).unwrap();
        assert_eq!(ext.beta.render(), "0->0 a->0 b->e1 1->e1");
        assert_eq!(ext.steps.len(), 2);
        assert!(ext.steps[0].rejected.is_empty());
        assert_eq!(ext.steps[1].rejected.len(), 1);
    }

    #[test]
    fn c3_into_square_forces_b() {
        let sq = Arc::new(catalog::square());
        let (sub, emb) = sublattice_by_names(&sq, &["0", "a", "1"]).unwrap();
        let b = b2();
        let alpha = LatticeHom::from_names(
            &[("0", "0"), ("a", "e1"), ("1", "e1")],
            &sub,
            b.lattice(),
            Flavor::Lattice,
        )
        .unwrap();
        let ext = sikorski_extend(&ExtensionProblem::new(emb, alpha, b).unwrap()).unwrap();
        assert_eq!(ext.beta.render(), "0->0 a->e1 b->0 1->e1");
    }

    #[test]
    fn identity_extension_is_alpha() {
        let lam = Arc::new(catalog::lam());
        let all: Vec<Elem> = lam.elements().collect();
        let (sub, emb) = crate::hom::sublattice_embedding(&lam, &all).unwrap();
        let b = b2();
        let alpha = LatticeHom::from_names(
            &[
                ("0", "0"),
                ("u", "e1"),
                ("v", "0"),
                ("w", "e1"),
                ("1", "e1"),
            ],
            &sub,
            b.lattice(),
            Flavor::Lattice,
        )
        .unwrap();
        let ext = sikorski_extend(&ExtensionProblem::new(emb, alpha.clone(), b).unwrap()).unwrap();
        assert_eq!(ext.beta.table(), alpha.table());
        assert!(ext.steps.is_empty());
    }

    #[test]
    fn mismatched_problem_rejected() {
        let sq = Arc::new(catalog::square());
        let (_, emb) = sublattice_by_names(&sq, &["0", "1"]).unwrap();
        let c3 = Arc::new(catalog::c3());
        let b = b2();
        let alpha = LatticeHom::from_names(
            &[("0", "0"), ("m", "e1"), ("1", "e1")],
            &c3,
            b.lattice(),
            Flavor::Lattice,
        )
        .unwrap();
        assert!(matches!(
            ExtensionProblem::new(emb, alpha, b),
            Err(Error::Mismatch(_))
        ));
    }
}
