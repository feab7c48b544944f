//! Small named lattices used by the test suites, benches and CLI corpus.

use crate::boolean::BooleanAlgebra;
use crate::lattice::{build_lattice, DistributiveLattice};

fn build(name: &str, elements: &[&str], covers: &[(&str, &str)]) -> DistributiveLattice {
    build_lattice(elements, covers)
        .unwrap_or_else(|e| panic!("catalog lattice {name}: {e}"))
        .with_name(name)
}

/// The one-element lattice, `1 = 0`.
pub fn trivial() -> DistributiveLattice {
    build("C1", &["0"], &[])
}

/// The `n`-element chain. Interior elements are `m` for `n = 3` and
/// `c1, c2, ...` otherwise.
pub fn chain(n: usize) -> DistributiveLattice {
    assert!(n >= 1, "chain needs at least one element");
    if n == 1 {
        return trivial();
    }
    let mut names = vec!["0".to_owned()];
    if n == 3 {
        names.push("m".to_owned());
    } else {
        names.extend((1..n - 1).map(|i| format!("c{i}")));
    }
    names.push("1".to_owned());
    let pairs: Vec<(String, String)> = names
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    build_lattice(&names, &pairs)
        .expect("chains are distributive")
        .with_name(format!("C{n}"))
}

pub fn c3() -> DistributiveLattice {
    chain(3)
}

/// `2 × 2` with midpoints `a`, `b`.
pub fn square() -> DistributiveLattice {
    build(
        "Sq",
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
}

/// `2 × 2` with pair names, as used by the conservativity counterexample.
pub fn square_pairs() -> DistributiveLattice {
    build(
        "2x2",
        &["(0,0)", "(0,1)", "(1,0)", "(1,1)"],
        &[
            ("(0,0)", "(0,1)"),
            ("(0,0)", "(1,0)"),
            ("(0,1)", "(1,1)"),
            ("(1,0)", "(1,1)"),
        ],
    )
}

/// The eight-element Boolean algebra viewed as a plain lattice.
pub fn b8() -> DistributiveLattice {
    let b = BooleanAlgebra::powerset(3).expect("3 atoms");
    (**b.lattice()).clone().with_name("B8")
}

/// Downsets of the poset `q < s, r < s`: `0 < u, v < w < 1`, `u \/ v = w`.
pub fn lam() -> DistributiveLattice {
    build(
        "Lam",
        &["0", "u", "v", "w", "1"],
        &[("0", "u"), ("0", "v"), ("u", "w"), ("v", "w"), ("w", "1")],
    )
}

/// Downsets of the poset `p < q, p < r`: `0 < p < q, r < 1`, `q /\ r = p`.
pub fn vee() -> DistributiveLattice {
    build(
        "Vee",
        &["0", "p", "q", "r", "1"],
        &[("0", "p"), ("p", "q"), ("p", "r"), ("q", "1"), ("r", "1")],
    )
}

/// The non-degenerate catalog: chains `C2`–`C5`, `Sq`, `B8`, `Lam`, `Vee`.
pub fn all() -> Vec<DistributiveLattice> {
    vec![
        chain(2),
        chain(3),
        chain(4),
        chain(5),
        square(),
        b8(),
        lam(),
        vee(),
    ]
}
