//! Conservation fails for codomains with a non-complemented element.
//!
//! For `D` with a non-complemented `d0`, the statement set
//! `X = {((0,0),0), ((1,1),1), ((0,1),d0)}` over `2×2 × D` is
//! inconsistent: every value `d` for `(1,0)` clashes through `(∧)` or
//! `(∨)` and `(s)`, and cutting `(t)` for `(1,0)` removes the case split.
//! Over the sublattice `{(0,0),(0,1),(1,1)}` the same `X` is the graph of
//! a hom, so the inclusion is not conservative.

use std::sync::Arc;

use crate::catalog::square_pairs;
use crate::engine::{Statement, StatementSet};
use crate::error::{Error, Result};
use crate::hom::{check_hom, sublattice_by_names, Flavor, LatticeHom};
use crate::lattice::{DistributiveLattice, Elem};

/// A clash between the value of `(1,0)` and `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `d0 ∧ d ≠ 0`: `(∧)` assigns `(0,0)` the value `d0 ∧ d`, against `((0,0),0)`.
    Meet { value: Elem },
    /// `d0 ∨ d ≠ 1`: `(∨)` assigns `(1,1)` the value `d0 ∨ d`, against `((1,1),1)`.
    Join { value: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub d: Elem,
    /// Never empty; the first entry is the one used in the trace.
    pub violations: Vec<Violation>,
}

/// `X` read over the three-element sublattice, checked as an ideal element.
#[derive(Debug, Clone)]
pub struct SubModel {
    pub hom: LatticeHom,
    pub instances_checked: usize,
}

#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub square: Arc<DistributiveLattice>,
    pub codomain: Arc<DistributiveLattice>,
    pub d0: Elem,
    /// Statements `(x, d)` with `x ∈ 2×2`, `d ∈ D`.
    pub x: StatementSet,
    pub refutations: Vec<Refutation>,
    pub sub_model: SubModel,
}

/// `true` with no witness, or `false` with the first non-complemented element.
pub fn is_complemented(d: &DistributiveLattice) -> (bool, Option<Elem>) {
    match d.first_uncomplemented() {
        Some(w) => (false, Some(w)),
        None => (true, None),
    }
}

pub fn conservativity_counterexample(d: &Arc<DistributiveLattice>) -> Result<CounterexampleReport> {
    let d0 = d.first_uncomplemented().ok_or(Error::NoCounterexample)?;
    let square = Arc::new(square_pairs());
    let sq = |n: &str| square.elem(n).expect("2x2 element");
    let (p00, p01, p10, p11) = (sq("(0,0)"), sq("(0,1)"), sq("(1,0)"), sq("(1,1)"));

    let x: StatementSet = [
        Statement::new(p00, d.bottom()),
        Statement::new(p11, d.top()),
        Statement::new(p01, d0),
    ]
    .into_iter()
    .collect();

    let mut refutations = Vec::with_capacity(d.len());
    for v in d.elements() {
        let mut violations = Vec::new();
        let meet = d.meet(d0, v);
        if meet != d.bottom() {
            violations.push(Violation::Meet { value: meet });
        }
        let join = d.join(d0, v);
        if join != d.top() {
            violations.push(Violation::Join { value: join });
        }
        if violations.is_empty() {
            return Err(Error::Internal(format!(
                "`{}` complements `{}`",
                d.elem_name(v),
                d.elem_name(d0)
            )));
        }
        refutations.push(Refutation { d: v, violations });
    }
    debug_assert_eq!(square.meet(p01, p10), p00);
    debug_assert_eq!(square.join(p01, p10), p11);

    let (sub, _) = sublattice_by_names(&square, &["(0,0)", "(0,1)", "(1,1)"])?;
    let table = sub
        .elements()
        .map(|s| {
            let name = sub.elem_name(s);
            x.iter()
                .find(|st| square.elem_name(st.x) == name)
                .map(|st| st.a)
                .ok_or_else(|| Error::Internal(format!("X has no value for {name}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = check_hom(table, &sub, d, Flavor::Lattice)
        .map_err(|e| Error::Internal(format!("sub-model is not a hom: {e}")))?;
    let instances_checked = check_axiom_instances(&hom)?;

    Ok(CounterexampleReport {
        square,
        codomain: Arc::clone(d),
        d0,
        x,
        refutations,
        sub_model: SubModel {
            hom,
            instances_checked,
        },
    })
}

// Checks that the graph of `hom` splits every instance of (s), (∧), (∨),
// (0), (1) and (t); returns the number of instances examined.
fn check_axiom_instances(hom: &LatticeHom) -> Result<usize> {
    let (l, d) = (hom.domain(), hom.codomain());
    let in_graph = |x: Elem, a: Elem| hom.apply(x) == a;
    let fail = |axiom: &str| {
        Err(Error::Internal(format!(
            "sub-model violates axiom ({axiom})"
        )))
    };
    let mut count = 0;
    for x in l.elements() {
        for a in d.elements() {
            for b in d.elements().filter(|&b| b != a) {
                count += 1;
                if in_graph(x, a) && in_graph(x, b) {
                    return fail("s");
                }
            }
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            for a in d.elements() {
                for b in d.elements() {
                    count += 2;
                    if in_graph(x, a) && in_graph(y, b) {
                        if !in_graph(l.meet(x, y), d.meet(a, b)) {
                            return fail("meet");
                        }
                        if !in_graph(l.join(x, y), d.join(a, b)) {
                            return fail("join");
                        }
                    }
                }
            }
        }
    }
    count += 2;
    if !in_graph(l.bottom(), d.bottom()) {
        return fail("0");
    }
    if !in_graph(l.top(), d.top()) {
        return fail("1");
    }
    for x in l.elements() {
        count += 1;
        if !d.elements().any(|a| in_graph(x, a)) {
            return fail("t");
        }
    }
    Ok(count)
}

impl CounterexampleReport {
    fn stmt(&self, x: &str, a: Elem) -> String {
        format!("({},{})", x, self.codomain.elem_name(a))
    }

    /// Deterministic human-readable trace.
    pub fn trace(&self) -> Vec<String> {
        let dn = |e: Elem| self.codomain.elem_name(e).to_owned();
        let (bot, top) = (self.codomain.bottom(), self.codomain.top());
        let x: Vec<String> = self
            .x
            .iter()
            .map(|s| self.stmt(self.square.elem_name(s.x), s.a))
            .collect();
        let mut out = vec![
            format!("d0: {}", dn(self.d0)),
            format!("X: {{{}}}", x.join(",")),
        ];
        for r in &self.refutations {
            let given = format!(
                "{},{}",
                self.stmt("(0,1)", self.d0),
                self.stmt("(1,0)", r.d)
            );
            let parts: Vec<String> = r
                .violations
                .iter()
                .map(|v| match *v {
                    Violation::Meet { value } => format!(
                        "(meet) {given} |- {}; (s) {},{} |-",
                        self.stmt("(0,0)", value),
                        self.stmt("(0,0)", bot),
                        self.stmt("(0,0)", value)
                    ),
                    Violation::Join { value } => format!(
                        "(join) {given} |- {}; (s) {},{} |-",
                        self.stmt("(1,1)", value),
                        self.stmt("(1,1)", top),
                        self.stmt("(1,1)", value)
                    ),
                })
                .collect();
            out.push(format!("refute d={}: {}", dn(r.d), parts.join(" | ")));
        }
        let all: Vec<String> = self
            .codomain
            .elements()
            .map(|d| self.stmt("(1,0)", d))
            .collect();
        out.push(format!("cut (t) |- {{{}}}: X |-", all.join(",")));
        out.push(format!(
            "sub_model: {} is an ideal element ({} axiom instances checked)",
            self.sub_model.hom.render(),
            self.sub_model.instances_checked
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::BooleanAlgebra;
    use crate::catalog;

    #[test]
    fn complemented_detection() {
        let b4 = BooleanAlgebra::powerset(2).unwrap();
        assert_eq!(is_complemented(b4.lattice()), (true, None));
        let c3 = catalog::c3();
        assert_eq!(is_complemented(&c3), (false, c3.elem("m").ok()));
        let lam = catalog::lam();
        assert_eq!(is_complemented(&lam), (false, lam.elem("u").ok()));
    }

    #[test]
    fn c3_counterexample() {
        let d = Arc::new(catalog::c3());
        let r = conservativity_counterexample(&d).unwrap();
        let m = d.elem("m").unwrap();
        assert_eq!(r.d0, m);
        let kinds: Vec<Vec<Violation>> =
            r.refutations.iter().map(|r| r.violations.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                vec![Violation::Join { value: m }],
                vec![Violation::Meet { value: m }, Violation::Join { value: m }],
                vec![Violation::Meet { value: m }],
            ]
        );
        let trace = r.trace();
        assert_eq!(trace[1], "X: {((0,0),0),((0,1),m),((1,1),1)}");
        assert_eq!(
            trace[2],
            "refute d=0: (join) ((0,1),m),((1,0),0) |- ((1,1),m); (s) ((1,1),1),((1,1),m) |-"
        );
        assert_eq!(r.sub_model.hom.render(), "(0,0)->0 (0,1)->m (1,1)->1");
    }

    #[test]
    fn complemented_has_no_counterexample() {
        let b4 = BooleanAlgebra::powerset(2).unwrap();
        assert_eq!(
            conservativity_counterexample(b4.lattice()).unwrap_err(),
            Error::NoCounterexample
        );
    }

    #[test]
    fn lam_counterexample() {
        let d = Arc::new(catalog::lam());
        let r = conservativity_counterexample(&d).unwrap();
        assert_eq!(d.elem_name(r.d0), "u");
        assert_eq!(r.refutations.len(), 5);
    }
}
