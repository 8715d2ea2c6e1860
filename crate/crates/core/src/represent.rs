//! Which functions `L^r -> L` are term functions, and an explicit
//! disjunctive normal form for those that are.
//!
//! A table is representable exactly when every output lies in the minimal
//! subalgebra `{0, 1, a_1, ..., a_r, 1-a_1, ..., 1-a_r}` of its input tuple.
//! The representing term is
//!
//! ```text
//! ⋁ over tuples a:  J_{a_1}(x_1) ∧ ... ∧ J_{a_r}(x_r) ∧ s(a, f(a))
//! ```
//!
//! where the selector `s` names `f(a)` as a constant, a variable or a
//! negated variable. Under any assignment `b`, every disjunct with `a ≠ b`
//! has a guard equal to `0`, so the whole join collapses to `s(b, f(b))`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{in_minimal_subalgebra, minimal_subalgebra_raw, Element, Valence};
use crate::error::{LmnError, Result};
use crate::term::{tuple_at, Term, TruthTable, Tuples};

/// An input tuple whose output escapes the tuple's minimal subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub valence: Valence,
    pub tuple: Vec<u32>,
    pub output: u32,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.valence;
        let tuple: Vec<String> = self.tuple.iter().map(|&a| v.show(a)).collect();
        let allowed = minimal_subalgebra_raw(v, &self.tuple);
        write!(
            f,
            "tuple=({}) output={} allowed={}",
            tuple.join(","),
            v.show(self.output),
            allowed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub representable: bool,
    pub counterexample: Option<Counterexample>,
}

/// Decides representability; reports the first violating tuple in table order.
pub fn check_representable(f: &TruthTable) -> Verdict {
    let n = f.valence().n();
    let counterexample = f
        .rows()
        .find(|(tuple, out)| !in_minimal_subalgebra(n, tuple, *out))
        .map(|(tuple, output)| Counterexample { valence: f.valence(), tuple, output });
    Verdict { representable: counterexample.is_none(), counterexample }
}

/// The violation at one particular tuple, if its output escapes the
/// tuple's minimal subalgebra.
pub fn violation_at(f: &TruthTable, tuple: &[u32]) -> Option<Counterexample> {
    let output = f.get(tuple);
    (!in_minimal_subalgebra(f.valence().n(), tuple, output)).then(|| Counterexample {
        valence: f.valence(),
        tuple: tuple.to_vec(),
        output,
    })
}

/// The term naming `a` relative to `tuple`: `1`, `0`, the first `x_i` with
/// `a = a_i`, or else `N x_i` for the first `i` with `a = 1 - a_i`, tried
/// in that order.
pub fn selector_term(tuple: &[Element], a: Element) -> Result<Term> {
    let v = a.valence();
    for e in tuple {
        v.check_same(e.valence())?;
    }
    let nums: Vec<u32> = tuple.iter().map(|e| e.numerator()).collect();
    selector_raw(v.n(), &nums, a.numerator())
        .ok_or(LmnError::SelectorOutOfRange { value: a.numerator() })
}

fn selector_raw(n: u32, tuple: &[u32], a: u32) -> Option<Term> {
    if a == n {
        return Some(Term::One);
    }
    if a == 0 {
        return Some(Term::Zero);
    }
    if let Some(i) = tuple.iter().position(|&x| x == a) {
        return Some(Term::Var(i as u32 + 1));
    }
    tuple
        .iter()
        .position(|&x| n - x == a)
        .map(|i| Term::neg(Term::Var(i as u32 + 1)))
}

/// The disjuncts of the normal form, one per tuple in table order.
pub fn synthesis_disjuncts(f: &TruthTable) -> Result<Vec<Term>> {
    let n = f.valence().n();
    f.rows()
        .map(|(tuple, out)| {
            let selector = selector_raw(n, &tuple, out).ok_or_else(|| {
                LmnError::NotRepresentable(Counterexample {
                    valence: f.valence(),
                    tuple: tuple.clone(),
                    output: out,
                })
            })?;
            let guard = tuple
                .iter()
                .enumerate()
                .map(|(k, &a)| Term::jay(a, Term::Var(k as u32 + 1)));
            // J_{a_1}(x_1) ∧ ... ∧ J_{a_r}(x_r) ∧ s, nested to the left
            let mut conj = guard.chain(std::iter::once(selector));
            let first = conj.next().expect("at least one conjunct");
            Ok(conj.fold(first, Term::and))
        })
        .collect()
}

/// Builds the normal-form representing term of `f`. The disjunction is a
/// balanced join so the term height stays logarithmic in the table size.
pub fn synthesize(f: &TruthTable) -> Result<Term> {
    if let Some(ce) = check_representable(f).counterexample {
        return Err(LmnError::NotRepresentable(ce));
    }
    Ok(Term::join_all(synthesis_disjuncts(f)?))
}

/// A tuple where a term and a table disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub tuple: Vec<u32>,
    pub expected: u32,
    pub actual: u32,
}

/// First tuple (in table order) where `t` and `f` differ, if any.
pub fn first_mismatch(t: &Term, f: &TruthTable, jobs: usize) -> Result<Option<Mismatch>> {
    let actual = t.truth_table_with(f.arity(), f.valence(), jobs)?;
    Ok(actual
        .outputs()
        .iter()
        .zip(f.outputs())
        .position(|(a, e)| a != e)
        .map(|idx| Mismatch {
            tuple: tuple_at(f.valence(), f.arity(), idx),
            expected: f.outputs()[idx],
            actual: actual.outputs()[idx],
        }))
}

/// Whether `t` represents `f`, checked over every tuple.
pub fn verify_representation(t: &Term, f: &TruthTable) -> Result<bool> {
    Ok(first_mismatch(t, f, 0)?.is_none())
}

/// Local, semantics-preserving clean-up: flattens `∨`/`∧` chains, removes
/// `0` disjuncts and `1` conjuncts, and absorbs `x ∨ 1` and `x ∧ 0`.
pub fn simplify(t: &Term) -> Term {
    match t {
        Term::Or(..) => {
            let mut ops = Vec::new();
            flatten(t, true, &mut ops);
            if ops.contains(&Term::One) {
                return Term::One;
            }
            ops.retain(|op| *op != Term::Zero);
            Term::join_all(ops)
        }
        Term::And(..) => {
            let mut ops = Vec::new();
            flatten(t, false, &mut ops);
            if ops.contains(&Term::Zero) {
                return Term::Zero;
            }
            ops.retain(|op| *op != Term::One);
            Term::meet_all(ops)
        }
        Term::Neg(a) => Term::neg(simplify(a)),
        Term::Delta(i, a) => Term::delta(*i, simplify(a)),
        Term::Jay(i, a) => Term::jay(*i, simplify(a)),
        Term::Zero | Term::One | Term::Var(_) => t.clone(),
    }
}

fn flatten(t: &Term, join: bool, out: &mut Vec<Term>) {
    match (t, join) {
        (Term::Or(a, b), true) | (Term::And(a, b), false) => {
            flatten(a, join, out);
            flatten(b, join, out);
        }
        _ => {
            let s = simplify(t);
            match (&s, join) {
                (Term::Or(..), true) | (Term::And(..), false) => flatten(&s, join, out),
                _ => out.push(s),
            }
        }
    }
}

/// `x → y = min(1, 1 - x + y)` as an arity-2 table.
pub fn lukasiewicz_implication_table(v: Valence) -> TruthTable {
    let n = v.n();
    TruthTable::from_fn(v, 2, |a| n.min(n - a[0] + a[1])).expect("well-formed table")
}

/// Every representable table of the given shape, in lexicographic order of
/// output sequences. There are `Π |M(a)|` of them, so keep `n` and `r` tiny.
pub fn all_representable(v: Valence, arity: usize) -> Vec<TruthTable> {
    let choices: Vec<Vec<u32>> = Tuples::new(v, arity)
        .map(|t| minimal_subalgebra_raw(v, &t).members().to_vec())
        .collect();
    let mut digits = vec![0usize; choices.len()];
    let mut out = Vec::new();
    loop {
        let outputs = digits.iter().zip(&choices).map(|(&d, c)| c[d]).collect();
        out.push(TruthTable::new(v, arity, outputs).expect("well-formed table"));
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < choices[pos].len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}
