//! Exact computation in the standard n-nuanced Łukasiewicz–Moisil algebras
//! `𝓛_n = {0, 1/n, ..., 1}`.
//!
//! - [`algebra`]: carrier, operations, nuances, subalgebras, axiom checks.
//! - [`term`]: terms, their concrete syntax, evaluation and truth tables.
//! - [`represent`]: deciding whether a table is a term function, and
//!   synthesizing a disjunctive-normal-form representing term.
//! - [`free`]: structure and size of the free algebras.
//! - [`sample`]: seeded random terms and representable tables.

pub mod algebra;
pub mod error;
pub mod free;
mod par;
pub mod represent;
pub mod sample;
pub mod term;

#[cfg(test)]
pub(crate) mod testing;

pub use algebra::{
    enumerate_subalgebras, generated_subalgebra, minimal_subalgebra, verify_axioms, Axiom, AxiomReport, Element,
    Subalgebra, Valence,
};
pub use error::{LmnError, Result};
pub use free::{
    alpha_bruteforce, alpha_formula, count_representable, free_cardinality, free_report, FreeAlgebraReport,
};
pub use represent::{
    check_representable, lukasiewicz_implication_table, selector_term, simplify, synthesize,
    verify_representation, violation_at, Counterexample, Verdict,
};
pub use term::{parse, Assignment, Term, TruthTable};

/// Exact count type used for cardinalities, which outgrow 64 bits quickly.
pub type Count = num_bigint::BigUint;

/// Floating-point count type, for order-of-magnitude estimates.
pub type ApproxCount = f64;
