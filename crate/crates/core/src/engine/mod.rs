//! The entailment relation generated by the axioms for lattice maps
//! `L → B` into a finite Boolean algebra, decided without proof search.
//!
//! A finite set `X` of statements is inconsistent exactly when some atom
//! `e` of `B` gives
//!
//! ```text
//! ⋀ { x : (x,a) ∈ X, e ≤ a }  ≤  ⋁ { x : (x,a) ∈ X, e ≤ −a }
//! ```
//!
//! in `L`. Each statement lands on exactly one side for a given atom. The
//! Heyting flavor replaces every `x` by `¬¬x` and takes the right-hand join
//! among regular elements, i.e. `¬¬` of the join in `L`.
//!
//! `X ⊢ Y` with `Y = {(y_1,b_1), …, (y_k,b_k)}` holds iff `X ∪ {(y_i,b'_i)}`
//! is inconsistent for every tuple with `b'_i ≠ b_i`. The tuples are walked
//! depth-first; a prefix that is already inconsistent stays inconsistent
//! under every extension, so its subtree is settled by one witness.

mod statement;

use std::fmt;
use std::sync::Arc;

pub use statement::{Sequent, Statement, StatementSet};

use crate::boolean::BooleanAlgebra;
use crate::error::{Error, Result};
use crate::hom::{Flavor, LatticeHom};
use crate::lattice::{DistributiveLattice, Elem};

/// Default bound on succedent size used by front ends.
pub const DEFAULT_MAX_SUCCEDENT: usize = 6;

/// Everything a decision needs: `L`, `B` and the flavor of maps.
#[derive(Debug, Clone)]
pub struct EntailmentContext {
    pub lattice: Arc<DistributiveLattice>,
    pub algebra: Arc<BooleanAlgebra>,
    pub flavor: Flavor,
}

/// An atom `e` with `lhs ≤ rhs`, certifying inconsistency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InconsistencyWitness {
    pub atom: Elem,
    pub lhs: Elem,
    pub rhs: Elem,
}

/// The witness for one counter-value tuple. `None` entries were never
/// assigned because a shorter prefix was already inconsistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleWitness {
    pub tuple: Vec<Option<Elem>>,
    pub witness: InconsistencyWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub entailed: bool,
    /// Covers every counter-value tuple when `entailed`; empty otherwise.
    pub witnesses: Vec<TupleWitness>,
    /// First counter-value tuple (in succedent order) whose extension of the
    /// antecedent is consistent.
    pub counter_tuple: Option<Vec<Elem>>,
}

impl EntailmentContext {
    pub fn new(
        lattice: Arc<DistributiveLattice>,
        algebra: Arc<BooleanAlgebra>,
        flavor: Flavor,
    ) -> Self {
        EntailmentContext {
            lattice,
            algebra,
            flavor,
        }
    }

    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        EntailmentContext {
            flavor,
            ..self.clone()
        }
    }

    /// Looks up a statement by element names.
    pub fn statement(&self, x: &str, a: &str) -> Result<Statement> {
        let x = self
            .lattice
            .elem(x)
            .map_err(|_| Error::ForeignElement(x.to_owned()))?;
        let a = self
            .algebra
            .elem(a)
            .map_err(|_| Error::ForeignElement(a.to_owned()))?;
        Ok(Statement { x, a })
    }

    pub fn statements(&self, pairs: &[(&str, &str)]) -> Result<StatementSet> {
        pairs.iter().map(|(x, a)| self.statement(x, a)).collect()
    }

    /// Every statement over this context, `L` outer and `B` inner.
    pub fn all_statements(&self) -> Vec<Statement> {
        self.lattice
            .elements()
            .flat_map(|x| self.algebra.elements().map(move |a| Statement { x, a }))
            .collect()
    }

    pub fn check(&self, set: &StatementSet) -> Result<()> {
        for s in set {
            if !self.lattice.contains(s.x) {
                return Err(Error::ForeignElement(s.x.to_string()));
            }
            if !self.algebra.lattice().contains(s.a) {
                return Err(Error::ForeignElement(s.a.to_string()));
            }
        }
        Ok(())
    }

    pub fn render(&self, s: &Statement) -> String {
        format!(
            "({},{})",
            self.lattice.elem_name(s.x),
            self.algebra.elem_name(s.a)
        )
    }

    pub fn render_set(&self, set: &StatementSet) -> String {
        let inner: Vec<String> = set.iter().map(|s| self.render(s)).collect();
        format!("{{{}}}", inner.join(","))
    }

    pub fn render_tuple(&self, tuple: &[Option<Elem>]) -> String {
        if tuple.is_empty() {
            return "()".to_owned();
        }
        tuple
            .iter()
            .map(|v| v.map_or("*", |a| self.algebra.elem_name(a)))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// One line per tuple: `tuple=<b'…> atom=<e> lhs=<x> rhs=<y>`.
    pub fn render_witness(&self, w: &TupleWitness) -> String {
        format!(
            "tuple={} atom={} lhs={} rhs={}",
            self.render_tuple(&w.tuple),
            self.algebra.elem_name(w.witness.atom),
            self.lattice.elem_name(w.witness.lhs),
            self.lattice.elem_name(w.witness.rhs),
        )
    }

    #[inline]
    fn lift(&self, x: Elem) -> Elem {
        match self.flavor {
            Flavor::Lattice => x,
            Flavor::Heyting => self.lattice.double_neg(x),
        }
    }
}

/// `X_a = { x : (x,a) ∈ X }`, in canonical order.
pub fn fiber(set: &StatementSet, a: Elem) -> Vec<Elem> {
    set.iter().filter(|s| s.a == a).map(|s| s.x).collect()
}

// Per-atom running meet (left) and join (right) of lifted elements.
#[derive(Clone)]
struct Sides {
    lhs: Vec<Elem>,
    rhs: Vec<Elem>,
}

impl Sides {
    fn empty(ctx: &EntailmentContext) -> Self {
        let n = ctx.algebra.atoms().len();
        Sides {
            lhs: vec![ctx.lattice.top(); n],
            rhs: vec![ctx.lattice.bottom(); n],
        }
    }

    fn add(&mut self, ctx: &EntailmentContext, s: Statement) {
        let x = ctx.lift(s.x);
        let l = &ctx.lattice;
        for i in 0..self.lhs.len() {
            if ctx.algebra.atom_below(i, s.a) {
                self.lhs[i] = l.meet(self.lhs[i], x);
            } else {
                self.rhs[i] = l.join(self.rhs[i], x);
            }
        }
    }

    fn witness(&self, ctx: &EntailmentContext) -> Option<InconsistencyWitness> {
        let l = &ctx.lattice;
        (0..self.lhs.len()).find_map(|i| {
            let rhs = ctx.lift(self.rhs[i]);
            l.leq(self.lhs[i], rhs).then(|| InconsistencyWitness {
                atom: ctx.algebra.atoms()[i],
                lhs: self.lhs[i],
                rhs,
            })
        })
    }
}

/// Decides `X ⊢`; on success returns the first witnessing atom.
pub fn is_inconsistent(
    ctx: &EntailmentContext,
    set: &StatementSet,
) -> Result<Option<InconsistencyWitness>> {
    ctx.check(set)?;
    let mut sides = Sides::empty(ctx);
    for s in set {
        sides.add(ctx, *s);
    }
    Ok(sides.witness(ctx))
}

/// Decides `X ⊢ Y`.
pub fn entails(ctx: &EntailmentContext, seq: &Sequent) -> Result<Decision> {
    ctx.check(&seq.antecedent)?;
    ctx.check(&seq.succedent)?;
    let mut sides = Sides::empty(ctx);
    for s in &seq.antecedent {
        sides.add(ctx, *s);
    }
    let succedent: Vec<Statement> = seq.succedent.iter().copied().collect();
    let mut search = Search {
        ctx,
        succedent: &succedent,
        prefix: Vec::with_capacity(succedent.len()),
        witnesses: Vec::new(),
    };
    match search.run(&sides) {
        None => Ok(Decision {
            entailed: true,
            witnesses: search.witnesses,
            counter_tuple: None,
        }),
        Some(tuple) => Ok(Decision {
            entailed: false,
            witnesses: Vec::new(),
            counter_tuple: Some(tuple),
        }),
    }
}

/// [`entails`] with a guard on the succedent size.
pub fn entails_bounded(
    ctx: &EntailmentContext,
    seq: &Sequent,
    max_succedent: usize,
) -> Result<Decision> {
    if seq.succedent.len() > max_succedent {
        return Err(Error::SuccedentTooLarge(seq.succedent.len(), max_succedent));
    }
    entails(ctx, seq)
}

struct Search<'a> {
    ctx: &'a EntailmentContext,
    succedent: &'a [Statement],
    prefix: Vec<Elem>,
    witnesses: Vec<TupleWitness>,
}

impl Search<'_> {
    // Returns the first consistent full tuple, or None if all are refuted.
    fn run(&mut self, sides: &Sides) -> Option<Vec<Elem>> {
        if let Some(witness) = sides.witness(self.ctx) {
            let mut tuple: Vec<Option<Elem>> = self.prefix.iter().copied().map(Some).collect();
            tuple.resize(self.succedent.len(), None);
            self.witnesses.push(TupleWitness { tuple, witness });
            return None;
        }
        let depth = self.prefix.len();
        let Some(&target) = self.succedent.get(depth) else {
            return Some(self.prefix.clone());
        };
        for b in self.ctx.algebra.elements().filter(|&b| b != target.a) {
            let mut next = sides.clone();
            next.add(self.ctx, Statement::new(target.x, b));
            self.prefix.push(b);
            let found = self.run(&next);
            self.prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// `f_φ(X) = { (φ(x), a) : (x,a) ∈ X }`.
pub fn interpret(phi: &LatticeHom, set: &StatementSet) -> Result<StatementSet> {
    set.iter()
        .map(|s| {
            if phi.domain().contains(s.x) {
                Ok(Statement::new(phi.apply(s.x), s.a))
            } else {
                Err(Error::ForeignElement(s.x.to_string()))
            }
        })
        .collect()
}

impl fmt::Display for InconsistencyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "atom={} lhs={} rhs={}", self.atom, self.lhs, self.rhs)
    }
}
