//! Random generators for property checks and benchmarks. Pass a seeded RNG
//! for reproducible samples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{minimal_subalgebra_raw, Valence};
use crate::term::{Term, TruthTable, Tuples};

/// A random term of height at most `depth + 1` over `x_1..x_arity`, with
/// every `Δ`/`J` index valid at `v`.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, depth: usize, arity: u32, v: Valence) -> Term {
    let n = v.n();
    let leaf = |rng: &mut R| match rng.gen_range(0..4) {
        0 => Term::Zero,
        1 => Term::One,
        _ => Term::Var(rng.gen_range(1..=arity.max(1))),
    };
    if depth == 0 {
        return leaf(rng);
    }
    match rng.gen_range(0..6) {
        0 => leaf(rng),
        1 => Term::or(random_term(rng, depth - 1, arity, v), random_term(rng, depth - 1, arity, v)),
        2 => Term::and(random_term(rng, depth - 1, arity, v), random_term(rng, depth - 1, arity, v)),
        3 => Term::neg(random_term(rng, depth - 1, arity, v)),
        4 => Term::delta(rng.gen_range(1..=n), random_term(rng, depth - 1, arity, v)),
        _ => Term::jay(rng.gen_range(0..=n), random_term(rng, depth - 1, arity, v)),
    }
}

/// A uniformly random representable table: each output is drawn
/// independently from its tuple's minimal subalgebra.
pub fn random_representable_table<R: Rng + ?Sized>(rng: &mut R, v: Valence, arity: usize) -> TruthTable {
    let outputs = Tuples::new(v, arity)
        .map(|t| {
            *minimal_subalgebra_raw(v, &t)
                .members()
                .choose(rng)
                .expect("subalgebras are nonempty")
        })
        .collect();
    TruthTable::new(v, arity, outputs).expect("well-formed table")
}
