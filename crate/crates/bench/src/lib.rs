//! Shared fixtures for the criterion benches.

use std::sync::Arc;

use sikorski_core::{catalog, BooleanAlgebra, EntailmentContext, Flavor};

/// `(name, context)` for every catalog lattice paired with `powerset:atoms`.
pub fn contexts(atoms: usize, flavor: Flavor) -> Vec<(String, EntailmentContext)> {
    let algebra = Arc::new(BooleanAlgebra::powerset(atoms).expect("valid atom count"));
    catalog::all()
        .into_iter()
        .map(|l| {
            let name = format!("{}/powerset:{atoms}", l.name());
            (
                name,
                EntailmentContext::new(Arc::new(l), Arc::clone(&algebra), flavor),
            )
        })
        .collect()
}
