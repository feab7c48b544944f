//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! Nothing in here calls the decision procedure; the oracles evaluate
//! definitions directly so that they can be compared against it.

#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use sikorski_core::{
    catalog, BooleanAlgebra, DistributiveLattice, Elem, EntailmentContext, Flavor, Sequent,
    Statement, StatementSet,
};

pub fn algebra(atoms: usize) -> Arc<BooleanAlgebra> {
    Arc::new(BooleanAlgebra::powerset(atoms).unwrap())
}

pub fn ctx(l: DistributiveLattice, atoms: usize, flavor: Flavor) -> EntailmentContext {
    EntailmentContext::new(Arc::new(l), algebra(atoms), flavor)
}

/// Every catalog lattice paired with `powerset:1..=max_atoms`, both flavors.
pub fn contexts(max_atoms: usize) -> Vec<EntailmentContext> {
    let mut out = Vec::new();
    for l in catalog::all() {
        let l = Arc::new(l);
        for atoms in 1..=max_atoms {
            for flavor in [Flavor::Lattice, Flavor::Heyting] {
                out.push(EntailmentContext::new(
                    Arc::clone(&l),
                    algebra(atoms),
                    flavor,
                ));
            }
        }
    }
    out
}

pub fn label(c: &EntailmentContext) -> String {
    format!(
        "{} -> powerset:{} ({:?})",
        c.lattice.name(),
        c.algebra.atoms().len(),
        c.flavor
    )
}

/// Greatest lower bound computed from the order alone.
pub fn brute_glb(l: &DistributiveLattice, x: Elem, y: Elem) -> Elem {
    let lower: Vec<Elem> = l
        .elements()
        .filter(|&z| l.leq(z, x) && l.leq(z, y))
        .collect();
    let best: Vec<Elem> = lower
        .iter()
        .copied()
        .filter(|&z| lower.iter().all(|&w| l.leq(w, z)))
        .collect();
    assert_eq!(best.len(), 1, "glb of {x} and {y} not unique");
    best[0]
}

pub fn brute_lub(l: &DistributiveLattice, x: Elem, y: Elem) -> Elem {
    let upper: Vec<Elem> = l
        .elements()
        .filter(|&z| l.leq(x, z) && l.leq(y, z))
        .collect();
    let best: Vec<Elem> = upper
        .iter()
        .copied()
        .filter(|&z| upper.iter().all(|&w| l.leq(z, w)))
        .collect();
    assert_eq!(best.len(), 1, "lub of {x} and {y} not unique");
    best[0]
}

/// Whether `table` is a hom `L → B`, checked on atom masks.
pub fn oracle_is_hom(c: &EntailmentContext, table: &[Elem]) -> bool {
    let (l, b) = (&c.lattice, &c.algebra);
    let full = (1u64 << b.atoms().len()) - 1;
    let m = |x: Elem| b.atom_mask(table[x.0]);
    if m(l.bottom()) != 0 || m(l.top()) != full {
        return false;
    }
    l.elements().all(|x| {
        l.elements().all(|y| {
            m(l.meet(x, y)) == m(x) & m(y)
                && m(l.join(x, y)) == m(x) | m(y)
                && (c.flavor == Flavor::Lattice || m(l.implies(x, y)) == (!m(x) & full) | m(y))
        })
    })
}

/// All homs by filtering every map `L → B`; `None` when there are too many maps.
pub fn brute_homs(c: &EntailmentContext, limit: usize) -> Option<Vec<Vec<Elem>>> {
    let (n, k) = (c.lattice.len(), c.algebra.len());
    let total = (k as f64).powi(n as i32);
    if total > limit as f64 {
        return None;
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let table: Vec<Elem> = digits.iter().map(|&d| Elem(d)).collect();
        if oracle_is_hom(c, &table) {
            out.push(table);
        }
        let mut i = 0;
        while i < n {
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out.sort();
    Some(out)
}

/// `X ⊢ Y` read semantically over an explicit list of hom tables.
pub fn oracle_entails(homs: &[Vec<Elem>], seq: &Sequent) -> bool {
    homs.iter().all(|h| {
        !seq.antecedent.iter().all(|s| h[s.x.0] == s.a)
            || seq.succedent.iter().any(|s| h[s.x.0] == s.a)
    })
}

/// The atom inequality evaluated literally, without incremental state.
pub fn naive_inconsistent(c: &EntailmentContext, set: &StatementSet) -> bool {
    let l = &c.lattice;
    let lift = |x: Elem| match c.flavor {
        Flavor::Lattice => x,
        Flavor::Heyting => l.double_neg(x),
    };
    (0..c.algebra.atoms().len()).any(|i| {
        let mut lhs = l.top();
        let mut rhs = l.bottom();
        for s in set {
            if c.algebra.atom_mask(s.a) >> i & 1 == 1 {
                lhs = l.meet(lhs, lift(s.x));
            } else {
                rhs = l.join(rhs, lift(s.x));
            }
        }
        l.leq(lhs, lift(rhs))
    })
}

/// Counter-value tuples enumerated in full, no pruning.
pub fn naive_entails(c: &EntailmentContext, seq: &Sequent) -> bool {
    let ys: Vec<Statement> = seq.succedent.iter().copied().collect();
    let values: Vec<Elem> = c.algebra.elements().collect();
    let mut tuple = vec![0usize; ys.len()];
    loop {
        let consistent_choice = ys.iter().zip(&tuple).all(|(y, &t)| values[t] != y.a);
        if consistent_choice {
            let mut set = seq.antecedent.clone();
            for (y, &t) in ys.iter().zip(&tuple) {
                set.insert(Statement::new(y.x, values[t]));
            }
            if !naive_inconsistent(c, &set) {
                return false;
            }
        }
        let mut i = 0;
        while i < tuple.len() {
            tuple[i] += 1;
            if tuple[i] < values.len() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == tuple.len() {
            return true;
        }
    }
}

pub fn random_set<R: Rng>(rng: &mut R, pool: &[Statement], max: usize) -> StatementSet {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| *pool.choose(rng).unwrap()).collect()
}

pub fn random_sequent<R: Rng>(
    rng: &mut R,
    c: &EntailmentContext,
    max_x: usize,
    max_y: usize,
) -> Sequent {
    let pool = c.all_statements();
    Sequent::new(random_set(rng, &pool, max_x), random_set(rng, &pool, max_y))
}

/// Every subset of `pool` with at most `max` elements.
pub fn subsets(pool: &[Statement], max: usize) -> Vec<StatementSet> {
    let mut out = vec![StatementSet::new()];
    let mut frontier = vec![(StatementSet::new(), 0usize)];
    for _ in 0..max {
        let mut next = Vec::new();
        for (set, start) in &frontier {
            for (i, s) in pool.iter().enumerate().skip(*start) {
                let grown = set.with(*s);
                out.push(grown.clone());
                next.push((grown, i + 1));
            }
        }
        frontier = next;
    }
    out
}

/// Every instance of the generating axioms over `c`, tagged by scheme;
/// `(→)` only in the Heyting flavor.
pub fn axiom_instances(c: &EntailmentContext) -> Vec<(&'static str, Sequent)> {
    let (l, b) = (&c.lattice, &c.algebra);
    let st = |x: Elem, a: Elem| Statement::new(x, a);
    let set = |items: &[Statement]| items.iter().copied().collect::<StatementSet>();
    let mut out = Vec::new();
    for x in l.elements() {
        for a in b.elements() {
            for v in b.elements().filter(|&v| v != a) {
                out.push(("s", Sequent::inconsistency(set(&[st(x, a), st(x, v)]))));
            }
        }
        let all: StatementSet = b.elements().map(|a| st(x, a)).collect();
        out.push(("t", Sequent::new(StatementSet::new(), all)));
    }
    for x in l.elements() {
        for y in l.elements() {
            for a in b.elements() {
                for v in b.elements() {
                    let ante = set(&[st(x, a), st(y, v)]);
                    out.push((
                        "meet",
                        Sequent::new(ante.clone(), set(&[st(l.meet(x, y), b.meet(a, v))])),
                    ));
                    out.push((
                        "join",
                        Sequent::new(ante.clone(), set(&[st(l.join(x, y), b.join(a, v))])),
                    ));
                    if c.flavor == Flavor::Heyting {
                        out.push((
                            "implies",
                            Sequent::new(ante, set(&[st(l.implies(x, y), b.implies(a, v))])),
                        ));
                    }
                }
            }
        }
    }
    out.push((
        "0",
        Sequent::new(StatementSet::new(), set(&[st(l.bottom(), b.zero())])),
    ));
    out.push((
        "1",
        Sequent::new(StatementSet::new(), set(&[st(l.top(), b.one())])),
    ));
    out
}

/// Subsets of `l` that contain both bounds and are closed under meet and
/// join, each sorted; `l` itself is included.
pub fn bounded_sublattices(l: &DistributiveLattice) -> Vec<Vec<Elem>> {
    let inner: Vec<Elem> = l
        .elements()
        .filter(|&x| x != l.bottom() && x != l.top())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << inner.len() {
        let mut set = vec![l.bottom(), l.top()];
        set.extend(
            (0..inner.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| inner[i]),
        );
        set.sort();
        set.dedup();
        let closed = set.iter().all(|&x| {
            set.iter()
                .all(|&y| set.contains(&l.meet(x, y)) && set.contains(&l.join(x, y)))
        });
        if closed {
            out.push(set);
        }
    }
    out
}

/// For `A = {0..n}`: every pair `L, R ⊆ A` such that each `U ⊆ A` meets `L`
/// or misses part of `R` must share an element. Returns `(pairs, hypotheses
/// met)`, panicking on a violation.
pub fn check_combinatorial_lemma(n: u32) -> (usize, usize) {
    let full: u32 = (1 << n) - 1;
    let (mut pairs, mut met) = (0, 0);
    for l in 0..=full {
        for r in 0..=full {
            pairs += 1;
            let hypothesis = (0..=full).all(|u| u & l != 0 || !u & full & r != 0);
            if hypothesis {
                met += 1;
                assert!(l & r != 0, "n={n}: L={l:#b} R={r:#b}");
            }
            // and conversely: a shared element satisfies the hypothesis
            if l & r != 0 {
                assert!(hypothesis);
            }
        }
    }
    (pairs, met)
}
