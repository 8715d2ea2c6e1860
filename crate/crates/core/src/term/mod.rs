//! Terms over the LM_n signature `{0, 1, ∨, ∧, N, Δ_1..Δ_n}`, with `J_i`
//! kept as a first-class node.

mod parse;
mod table;

use std::fmt;

pub use parse::parse;
pub use table::{tuple_at, tuple_index, Tuples, TruthTable};

use crate::algebra::{jay_in, Element, NuancedChain, Standard, Valence};
use crate::error::{LmnError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    /// `x_k`, `k >= 1`.
    Var(u32),
    Or(Box<Term>, Box<Term>),
    And(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    /// `Δ_i`, `1 <= i <= n`.
    Delta(u32, Box<Term>),
    /// `J_i`, `0 <= i <= n`.
    Jay(u32, Box<Term>),
}

impl Term {
    pub fn var(k: u32) -> Term {
        Term::Var(k)
    }

    pub fn or(a: Term, b: Term) -> Term {
        Term::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Term, b: Term) -> Term {
        Term::And(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    pub fn delta(i: u32, a: Term) -> Term {
        Term::Delta(i, Box::new(a))
    }

    pub fn jay(i: u32, a: Term) -> Term {
        Term::Jay(i, Box::new(a))
    }

    /// Joins `terms` as a balanced tree, so that the height grows
    /// logarithmically with the number of operands. Empty input gives `0`.
    pub fn join_all(terms: Vec<Term>) -> Term {
        balanced(terms, Term::Zero, Term::or)
    }

    /// Meets `terms` as a balanced tree. Empty input gives `1`.
    pub fn meet_all(terms: Vec<Term>) -> Term {
        balanced(terms, Term::One, Term::and)
    }

    /// Largest variable index occurring, `0` for closed terms.
    pub fn arity(&self) -> usize {
        match self {
            Term::Zero | Term::One => 0,
            Term::Var(k) => *k as usize,
            Term::Or(a, b) | Term::And(a, b) => a.arity().max(b.arity()),
            Term::Neg(a) | Term::Delta(_, a) | Term::Jay(_, a) => a.arity(),
        }
    }

    pub fn height(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Var(_) => 1,
            Term::Or(a, b) | Term::And(a, b) => 1 + a.height().max(b.height()),
            Term::Neg(a) | Term::Delta(_, a) | Term::Jay(_, a) => 1 + a.height(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Var(_) => 1,
            Term::Or(a, b) | Term::And(a, b) => 1 + a.size() + b.size(),
            Term::Neg(a) | Term::Delta(_, a) | Term::Jay(_, a) => 1 + a.size(),
        }
    }

    /// Checks every `Δ`/`J` index against `v`.
    pub fn check_indices(&self, v: Valence) -> Result<()> {
        match self {
            Term::Zero | Term::One | Term::Var(_) => Ok(()),
            Term::Or(a, b) | Term::And(a, b) => {
                a.check_indices(v)?;
                b.check_indices(v)
            }
            Term::Neg(a) => a.check_indices(v),
            Term::Delta(i, a) => {
                v.check_delta(*i)?;
                a.check_indices(v)
            }
            Term::Jay(i, a) => {
                v.check_jay(*i)?;
                a.check_indices(v)
            }
        }
    }

    /// Rewrites every `J_i` node into the core signature.
    pub fn expand_jay(&self, v: Valence) -> Result<Term> {
        let n = v.n();
        Ok(match self {
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            Term::Var(k) => Term::Var(*k),
            Term::Or(a, b) => Term::or(a.expand_jay(v)?, b.expand_jay(v)?),
            Term::And(a, b) => Term::and(a.expand_jay(v)?, b.expand_jay(v)?),
            Term::Neg(a) => Term::neg(a.expand_jay(v)?),
            Term::Delta(i, a) => {
                v.check_delta(*i)?;
                Term::delta(*i, a.expand_jay(v)?)
            }
            Term::Jay(i, a) => {
                v.check_jay(*i)?;
                let x = a.expand_jay(v)?;
                match *i {
                    i if i == n => Term::delta(1, x),
                    0 => Term::neg(Term::delta(n, x)),
                    i => Term::and(Term::delta(n - i + 1, x.clone()), Term::neg(Term::delta(n - i, x))),
                }
            }
        })
    }

    /// Evaluates under an assignment, i.e. applies the unique morphism into
    /// the standard algebra that sends `x_k` to the `k`-th value.
    pub fn eval(&self, asg: &Assignment) -> Result<Element> {
        let num = self.eval_raw(asg.valence, &asg.values)?;
        asg.valence.element(num)
    }

    /// Evaluation on numerators; `values[k - 1]` is the value of `x_k`.
    pub fn eval_raw(&self, v: Valence, values: &[u32]) -> Result<u32> {
        let alg = Standard(v);
        self.eval_in(&alg, values)
    }

    pub(crate) fn eval_in<A: NuancedChain>(&self, alg: &A, values: &[u32]) -> Result<u32> {
        Ok(match self {
            Term::Zero => 0,
            Term::One => alg.valence().n(),
            Term::Var(k) => *values
                .get((*k as usize).wrapping_sub(1))
                .ok_or(LmnError::UnboundVariable(*k))?,
            Term::Or(a, b) => alg.join(a.eval_in(alg, values)?, b.eval_in(alg, values)?),
            Term::And(a, b) => alg.meet(a.eval_in(alg, values)?, b.eval_in(alg, values)?),
            Term::Neg(a) => alg.neg(a.eval_in(alg, values)?),
            Term::Delta(i, a) => {
                alg.valence().check_delta(*i)?;
                alg.delta(*i, a.eval_in(alg, values)?)
            }
            Term::Jay(i, a) => {
                alg.valence().check_jay(*i)?;
                jay_in(alg, *i, a.eval_in(alg, values)?)
            }
        })
    }

    /// Tabulates the term as a function of `arity` variables.
    pub fn truth_table(&self, arity: usize, v: Valence) -> Result<TruthTable> {
        self.truth_table_with(arity, v, 0)
    }

    /// Like [`Term::truth_table`], spreading the tuple range over `jobs`
    /// worker threads (`0` = rayon's default). The result does not depend
    /// on `jobs`.
    pub fn truth_table_with(&self, arity: usize, v: Valence, jobs: usize) -> Result<TruthTable> {
        let needed = self.arity();
        if arity < needed || arity == 0 {
            return Err(LmnError::ArityTooSmall { requested: arity, needed: needed.max(1) });
        }
        self.check_indices(v)?;
        let len = table::table_len(v, arity)?;
        let outputs = crate::par::map_indices(len, jobs, |idx| {
            let tuple = tuple_at(v, arity, idx);
            self.eval_raw(v, &tuple)
        })?;
        TruthTable::new(v, arity, outputs)
    }
}

fn balanced(mut terms: Vec<Term>, empty: Term, combine: fn(Term, Term) -> Term) -> Term {
    fn go(terms: &mut Vec<Term>, lo: usize, hi: usize, combine: fn(Term, Term) -> Term) -> Term {
        if hi - lo == 1 {
            return std::mem::replace(&mut terms[lo], Term::Zero);
        }
        // left half takes the extra operand so short chains nest to the left
        let mid = lo + (hi - lo).div_ceil(2);
        let left = go(terms, lo, mid, combine);
        let right = go(terms, mid, hi, combine);
        combine(left, right)
    }
    match terms.len() {
        0 => empty,
        len => go(&mut terms, 0, len, combine),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::format(self))
    }
}

impl std::str::FromStr for Term {
    type Err = LmnError;

    fn from_str(s: &str) -> Result<Term> {
        parse(s)
    }
}

/// Values for `x_1, x_2, ...` at a common valence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    valence: Valence,
    values: Vec<u32>,
}

impl Assignment {
    pub fn new(valence: Valence, values: &[Element]) -> Result<Self> {
        for e in values {
            valence.check_same(e.valence())?;
        }
        Ok(Assignment { valence, values: values.iter().map(|e| e.numerator()).collect() })
    }

    pub fn from_numerators(valence: Valence, values: Vec<u32>) -> Result<Self> {
        for &num in &values {
            valence.element(num)?;
        }
        Ok(Assignment { valence, values })
    }

    pub fn valence(&self) -> Valence {
        self.valence
    }

    pub fn numerators(&self) -> &[u32] {
        &self.values
    }
}
