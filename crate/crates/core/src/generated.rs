//! The distributive lattice generated by the entailment relation of a
//! finite context, built as a quotient of formal joins of meets.
//!
//! Classes are discovered breadth-first from the generators `i(x,a)`,
//! closing under binary meet and join and identifying two formal
//! expressions when each is below the other. The order between formal
//! expressions reduces to entailment: `⋁_i ⋀X_i ≤ ⋁_j ⋀Y_j` iff every
//! `X_i` entails every choice set `{f(j) : j}` with `f(j) ∈ Y_j`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::boolean::{powerset_name, BooleanAlgebra};
use crate::engine::{
    entails, is_inconsistent, EntailmentContext, Sequent, Statement, StatementSet,
};
use crate::error::{Error, Result};
use crate::hom::{check_hom, Embedding, Flavor, LatticeHom};
use crate::lattice::{DistributiveLattice, Elem};
use crate::poset::FinitePoset;

pub const DEFAULT_MAX_CLASSES: usize = 4096;

/// A formal join of meets of statements. No disjuncts is bottom; an empty
/// disjunct is top.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalDnf {
    disjuncts: BTreeSet<StatementSet>,
}

impl FormalDnf {
    pub fn bottom() -> Self {
        FormalDnf::default()
    }

    pub fn top() -> Self {
        FormalDnf {
            disjuncts: [StatementSet::new()].into_iter().collect(),
        }
    }

    pub fn generator(s: Statement) -> Self {
        FormalDnf {
            disjuncts: [[s].into_iter().collect()].into_iter().collect(),
        }
    }

    pub fn from_disjuncts(disjuncts: impl IntoIterator<Item = StatementSet>) -> Self {
        FormalDnf {
            disjuncts: disjuncts.into_iter().collect(),
        }
    }

    pub fn disjuncts(&self) -> impl Iterator<Item = &StatementSet> {
        self.disjuncts.iter()
    }

    pub fn len(&self) -> usize {
        self.disjuncts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disjuncts.is_empty()
    }

    pub fn meet(&self, other: &FormalDnf) -> FormalDnf {
        FormalDnf::from_disjuncts(
            self.disjuncts
                .iter()
                .flat_map(|x| other.disjuncts.iter().map(move |y| x.union(y))),
        )
    }

    pub fn join(&self, other: &FormalDnf) -> FormalDnf {
        FormalDnf::from_disjuncts(self.disjuncts.union(&other.disjuncts).cloned())
    }

    pub fn render(&self, ctx: &EntailmentContext) -> String {
        if self.disjuncts.is_empty() {
            return "bottom".to_owned();
        }
        self.disjuncts
            .iter()
            .map(|d| {
                if d.is_empty() {
                    "top".to_owned()
                } else {
                    d.iter()
                        .map(|s| ctx.render(s))
                        .collect::<Vec<_>>()
                        .join(" /\\ ")
                }
            })
            .collect::<Vec<_>>()
            .join(" \\/ ")
    }
}

/// Order of the generated lattice on formal expressions.
pub fn dnf_leq(ctx: &EntailmentContext, lower: &FormalDnf, upper: &FormalDnf) -> Result<bool> {
    let uppers: Vec<Vec<Statement>> = upper
        .disjuncts
        .iter()
        .map(|d| d.iter().copied().collect())
        .collect();
    let mut choices = BTreeSet::new();
    collect_choices(&uppers, &mut StatementSet::new(), &mut choices);
    for x in &lower.disjuncts {
        for y in &choices {
            if !entails(ctx, &Sequent::new(x.clone(), y.clone()))?.entailed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// Every set {f(j)} for choice functions f over the disjuncts.
fn collect_choices(
    disjuncts: &[Vec<Statement>],
    acc: &mut StatementSet,
    out: &mut BTreeSet<StatementSet>,
) {
    let Some((first, rest)) = disjuncts.split_first() else {
        out.insert(acc.clone());
        return;
    };
    for s in first {
        let fresh = acc.insert(*s);
        collect_choices(rest, acc, out);
        if fresh {
            acc.remove(s);
        }
    }
}

// Drops inconsistent disjuncts and those entailing another kept disjunct.
fn simplify(ctx: &EntailmentContext, dnf: FormalDnf) -> Result<FormalDnf> {
    let mut kept: Vec<StatementSet> = Vec::new();
    for d in dnf.disjuncts {
        if is_inconsistent(ctx, &d)?.is_some() {
            continue;
        }
        let mut absorbed = false;
        for k in &kept {
            if below_meet(ctx, &d, k)? {
                absorbed = true;
                break;
            }
        }
        if absorbed {
            continue;
        }
        let mut survivors = Vec::with_capacity(kept.len() + 1);
        for k in kept {
            if !below_meet(ctx, &k, &d)? {
                survivors.push(k);
            }
        }
        survivors.push(d);
        kept = survivors;
    }
    Ok(FormalDnf::from_disjuncts(kept))
}

// ⋀x ≤ ⋀y
fn below_meet(ctx: &EntailmentContext, x: &StatementSet, y: &StatementSet) -> Result<bool> {
    for s in y {
        if !entails(ctx, &Sequent::new(x.clone(), [*s].into_iter().collect()))?.entailed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The finite generated lattice of a context.
#[derive(Debug, Clone)]
pub struct GeneratedLattice {
    pub ctx: EntailmentContext,
    /// Class representatives; class `i` is carrier element `i`.
    pub classes: Vec<FormalDnf>,
    pub lattice: Arc<DistributiveLattice>,
    /// `i : S → carrier`.
    pub unit: BTreeMap<Statement, Elem>,
    /// Every formal expression met during closure, with its class.
    pub members: Vec<(FormalDnf, Elem)>,
}

pub fn generate_lattice(ctx: &EntailmentContext, max_classes: usize) -> Result<GeneratedLattice> {
    let mut closure = Closure {
        ctx,
        max_classes,
        classes: Vec::new(),
        members: Vec::new(),
        seen: HashMap::new(),
    };
    let mut unit = BTreeMap::new();
    for s in ctx.all_statements() {
        let c = closure.class_of(FormalDnf::generator(s))?;
        unit.insert(s, Elem(c));
    }
    closure.class_of(FormalDnf::bottom())?;
    closure.class_of(FormalDnf::top())?;

    let mut meet: HashMap<(usize, usize), usize> = HashMap::new();
    let mut join: HashMap<(usize, usize), usize> = HashMap::new();
    let mut done = 0;
    while done < closure.classes.len() {
        for j in 0..=done {
            let (a, b) = (closure.classes[done].clone(), closure.classes[j].clone());
            let m = closure.class_of(a.meet(&b))?;
            let k = closure.class_of(a.join(&b))?;
            meet.insert((done, j), m);
            meet.insert((j, done), m);
            join.insert((done, j), k);
            join.insert((j, done), k);
        }
        done += 1;
    }

    let n = closure.classes.len();
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = dnf_leq(ctx, &closure.classes[i], &closure.classes[j])?;
        }
    }
    let lattice = DistributiveLattice::from_poset(FinitePoset::from_matrix(names, leq)?)?
        .with_name(format!("L({})", ctx.lattice.name()));
    for i in 0..n {
        for j in 0..n {
            if lattice.meet(Elem(i), Elem(j)) != Elem(meet[&(i, j)])
                || lattice.join(Elem(i), Elem(j)) != Elem(join[&(i, j)])
            {
                return Err(Error::Internal(
                    "closure operations disagree with the induced order".into(),
                ));
            }
        }
    }
    Ok(GeneratedLattice {
        ctx: ctx.clone(),
        classes: closure.classes,
        lattice: Arc::new(lattice),
        unit,
        members: closure.members,
    })
}

struct Closure<'a> {
    ctx: &'a EntailmentContext,
    max_classes: usize,
    classes: Vec<FormalDnf>,
    members: Vec<(FormalDnf, Elem)>,
    seen: HashMap<FormalDnf, usize>,
}

impl Closure<'_> {
    fn class_of(&mut self, dnf: FormalDnf) -> Result<usize> {
        if let Some(&c) = self.seen.get(&dnf) {
            return Ok(c);
        }
        let simple = simplify(self.ctx, dnf.clone())?;
        let mut found = None;
        for (i, rep) in self.classes.iter().enumerate() {
            if dnf_leq(self.ctx, &simple, rep)? && dnf_leq(self.ctx, rep, &simple)? {
                found = Some(i);
                break;
            }
        }
        let c = match found {
            Some(c) => c,
            None => {
                if self.classes.len() == self.max_classes {
                    return Err(Error::TooManyClasses(self.max_classes));
                }
                self.classes.push(simple.clone());
                self.classes.len() - 1
            }
        };
        if simple != dnf {
            self.seen.insert(simple.clone(), c);
            self.members.push((simple, Elem(c)));
        }
        self.seen.insert(dnf.clone(), c);
        self.members.push((dnf, Elem(c)));
        Ok(c)
    }
}

impl GeneratedLattice {
    pub fn class_of_statement(&self, s: &Statement) -> Elem {
        self.unit[s]
    }

    fn meet_of(&self, set: &StatementSet) -> Elem {
        self.lattice.meet_all(set.iter().map(|s| self.unit[s]))
    }

    fn join_of(&self, set: &StatementSet) -> Elem {
        self.lattice.join_all(set.iter().map(|s| self.unit[s]))
    }

    /// Checks `X ⊢ Y ⇔ ⋀i(X) ≤ ⋁i(Y)` for every pair with
    /// `|X| + |Y| ≤ max_total`; returns the number of sequents checked.
    pub fn verify_unit(&self, max_total: usize) -> Result<usize> {
        let statements = self.ctx.all_statements();
        let mut count = 0;
        for_each_sequent(&statements, max_total, |seq| {
            let syntactic = entails(&self.ctx, seq)?.entailed;
            let semantic = self
                .lattice
                .leq(self.meet_of(&seq.antecedent), self.join_of(&seq.succedent));
            if syntactic != semantic {
                return Err(Error::Internal(format!(
                    "unit is not conservative at {} |- {}",
                    self.ctx.render_set(&seq.antecedent),
                    self.ctx.render_set(&seq.succedent)
                )));
            }
            count += 1;
            Ok(())
        })?;
        Ok(count)
    }
}

/// Calls `f` on every sequent over `statements` with `|X| + |Y| ≤ max_total`.
pub fn for_each_sequent(
    statements: &[Statement],
    max_total: usize,
    mut f: impl FnMut(&Sequent) -> Result<()>,
) -> Result<()> {
    let subsets = subsets_up_to(statements, max_total);
    for x in &subsets {
        for y in &subsets {
            if x.len() + y.len() <= max_total {
                f(&Sequent::new(x.clone(), y.clone()))?;
            }
        }
    }
    Ok(())
}

fn subsets_up_to(items: &[Statement], k: usize) -> Vec<StatementSet> {
    let mut out = vec![StatementSet::new()];
    let mut frontier = vec![(StatementSet::new(), 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for (set, start) in &frontier {
            for (i, s) in items.iter().enumerate().skip(*start) {
                let grown = set.with(*s);
                out.push(grown.clone());
                next.push((grown, i + 1));
            }
        }
        frontier = next;
    }
    out
}

/// The Boolean algebra generated by `(L × 2, ⊢)` with `L` embedded by
/// `x ↦ i(x, 1)`.
#[derive(Debug, Clone)]
pub struct GeneratedAlgebra {
    pub generated: GeneratedLattice,
    pub algebra: BooleanAlgebra,
    pub embedding: Embedding,
    /// Sequents on which the unit was checked conservative.
    pub unit_checked: usize,
}

pub fn generate_boolean_algebra(l: &Arc<DistributiveLattice>) -> Result<GeneratedAlgebra> {
    generate_boolean_algebra_capped(l, DEFAULT_MAX_CLASSES)
}

pub fn generate_boolean_algebra_capped(
    l: &Arc<DistributiveLattice>,
    max_classes: usize,
) -> Result<GeneratedAlgebra> {
    if l.is_degenerate() {
        return Err(Error::DegenerateLattice);
    }
    let two = Arc::new(BooleanAlgebra::powerset(1)?);
    let ctx = EntailmentContext::new(Arc::clone(l), Arc::clone(&two), Flavor::Lattice);
    let mut generated = generate_lattice(&ctx, max_classes)?;

    let provisional = BooleanAlgebra::from_lattice((*generated.lattice).clone())
        .map_err(|e| Error::Internal(format!("generated lattice is not Boolean: {e}")))?;
    // reorder classes so that carrier index = atom mask
    let mut order: Vec<Elem> = generated.lattice.elements().collect();
    order.sort_by_key(|&c| provisional.atom_mask(c));
    let mut position = vec![Elem(0); order.len()];
    for (new, old) in order.iter().enumerate() {
        position[old.0] = Elem(new);
    }
    let names: Vec<String> = order
        .iter()
        .map(|&c| powerset_name(provisional.atom_mask(c)))
        .collect();
    let n = names.len();
    let mut leq = vec![false; n * n];
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate() {
            leq[i * n + j] = generated.lattice.leq(a, b);
        }
    }
    let renamed = DistributiveLattice::from_poset(FinitePoset::from_matrix(names, leq)?)?
        .with_name(generated.lattice.name());
    let algebra = BooleanAlgebra::from_lattice(renamed)?;
    generated.classes = order
        .iter()
        .map(|c| generated.classes[c.0].clone())
        .collect();
    for c in generated.unit.values_mut() {
        *c = position[c.0];
    }
    for (_, c) in generated.members.iter_mut() {
        *c = position[c.0];
    }
    generated.lattice = Arc::clone(algebra.lattice());

    let one = two.one();
    let table: Vec<Elem> = l
        .elements()
        .map(|x| generated.unit[&Statement::new(x, one)])
        .collect();
    let hom = check_hom(table, l, algebra.lattice(), Flavor::Lattice)
        .map_err(|e| Error::Internal(format!("x -> i(x,1) is not a hom: {e}")))?;
    let embedding = Embedding::new(hom)
        .map_err(|e| Error::Internal(format!("x -> i(x,1) is not injective: {e}")))?;

    let depth = if generated.classes.len() <= 64 { 4 } else { 2 };
    let unit_checked = generated.verify_unit(depth)?;
    Ok(GeneratedAlgebra {
        generated,
        algebra,
        embedding,
        unit_checked,
    })
}

/// Extends an interpretation `f: S → L'` to the lattice map
/// `f'(⋁_i ⋀X_i) = ⋁_i ⋀f(X_i)` on the generated carrier.
///
/// `f` is checked against the interpretation law on every sequent with
/// `|X| + |Y| ≤ law_depth`, and `f'` against every formal expression met
/// during closure.
pub fn factor_interpretation(
    generated: &GeneratedLattice,
    f: &BTreeMap<Statement, Elem>,
    target: &Arc<DistributiveLattice>,
    law_depth: usize,
) -> Result<LatticeHom> {
    let ctx = &generated.ctx;
    let statements = ctx.all_statements();
    let image = |s: &Statement| -> Result<Elem> {
        f.get(s)
            .copied()
            .filter(|e| target.contains(*e))
            .ok_or_else(|| {
                Error::NotAnInterpretation(format!("no valid image for {}", ctx.render(s)))
            })
    };
    for s in &statements {
        image(s)?;
    }
    let meet_img = |set: &StatementSet| target.meet_all(set.iter().map(|s| f[s]));
    let join_img = |set: &StatementSet| target.join_all(set.iter().map(|s| f[s]));

    for_each_sequent(&statements, law_depth, |seq| {
        if entails(ctx, seq)?.entailed
            && !target.leq(meet_img(&seq.antecedent), join_img(&seq.succedent))
        {
            return Err(Error::NotAnInterpretation(format!(
                "{} |- {} but the images are not ordered",
                ctx.render_set(&seq.antecedent),
                ctx.render_set(&seq.succedent)
            )));
        }
        Ok(())
    })?;

    let dnf_img = |d: &FormalDnf| target.join_all(d.disjuncts().map(meet_img));
    let table: Vec<Elem> = generated.classes.iter().map(dnf_img).collect();
    for (dnf, class) in &generated.members {
        if dnf_img(dnf) != table[class.0] {
            return Err(Error::IllDefined(format!(
                "{} and {} are equal but have different images",
                dnf.render(ctx),
                generated.classes[class.0].render(ctx)
            )));
        }
    }
    let hom = check_hom(table, &generated.lattice, target, Flavor::Lattice)
        .map_err(|e| Error::IllDefined(e.to_string()))?;
    for s in &statements {
        if hom.apply(generated.unit[s]) != f[s] {
            return Err(Error::IllDefined(format!(
                "factorization misses {}",
                ctx.render(s)
            )));
        }
    }
    Ok(hom)
}
