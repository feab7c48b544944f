//! Entailment relations for lattice maps from a finite distributive
//! lattice into a finite Boolean algebra.
//!
//! The crate decides the generated entailment relation directly through an
//! atom-indexed lattice inequality, checks the answer against exhaustive
//! model enumeration, and builds on it: extension of homs along sublattice
//! embeddings, the Boolean algebra generated by `L × 2`, the Heyting
//! variant via double negation, and the failure of conservation for
//! codomains that are not complemented.

pub mod boolean;
pub mod catalog;
pub mod counterexample;
pub mod engine;
pub mod error;
pub mod extension;
pub mod generated;
pub mod hom;
pub mod lattice;
pub mod models;
pub mod poset;

pub use boolean::{build_boolean_algebra, BooleanAlgebra};
pub use counterexample::{conservativity_counterexample, is_complemented, CounterexampleReport};
pub use engine::{
    entails, fiber, interpret, is_inconsistent, Decision, EntailmentContext, InconsistencyWitness,
    Sequent, Statement, StatementSet,
};
pub use error::{Error, Result};
pub use extension::{sikorski_extend, Extension, ExtensionProblem};
pub use generated::{
    dnf_leq, factor_interpretation, generate_boolean_algebra, FormalDnf, GeneratedAlgebra,
    GeneratedLattice,
};
pub use hom::{booleanization, check_hom, sublattice_embedding, Embedding, Flavor, LatticeHom};
pub use lattice::{build_lattice, DistributiveLattice, Elem};
pub use models::{
    enumerate_homs, restriction_is_surjective, semantic_entails, IdealElement, Models,
    SemanticVerdict,
};
pub use poset::FinitePoset;
