//! The standard LM_n-algebra: the chain `{0, 1/n, ..., (n-1)/n, 1}` with
//! max/min, `N(x) = 1 - x` and the nuances `Δ_i`.
//!
//! Elements are stored as integer numerators `j` together with their
//! [`Valence`] `n`. Everything is exact; there is no floating point here.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{LmnError, Result};

/// The `n` of an n-nuanced algebra. The carrier has `n + 1` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Valence(u32);

impl Valence {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            Err(LmnError::InvalidValence(n))
        } else {
            Ok(Valence(n))
        }
    }

    #[inline]
    pub fn n(self) -> u32 {
        self.0
    }

    /// Number of carrier elements, `n + 1`.
    #[inline]
    pub fn carrier_size(self) -> usize {
        self.0 as usize + 1
    }

    pub fn element(self, num: u32) -> Result<Element> {
        if num > self.0 {
            return Err(LmnError::ElementOutOfRange { num, n: self.0 });
        }
        Ok(Element { num, valence: self })
    }

    pub fn bottom(self) -> Element {
        Element { num: 0, valence: self }
    }

    pub fn top(self) -> Element {
        Element { num: self.0, valence: self }
    }

    pub fn elements(self) -> impl Iterator<Item = Element> {
        (0..=self.0).map(move |num| Element { num, valence: self })
    }

    /// Parses `j/n` (the denominator must equal this valence) or a bare numerator `j`.
    pub fn parse_element(self, text: &str) -> Result<Element> {
        let bad = |msg: String| LmnError::Parse { pos: 0, msg };
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (text, None),
        };
        let num: u32 = num
            .parse()
            .map_err(|_| bad(format!("invalid element literal {text:?}")))?;
        if let Some(den) = den {
            let den: u32 = den
                .parse()
                .map_err(|_| bad(format!("invalid element literal {text:?}")))?;
            if den != self.0 {
                return Err(LmnError::ValenceMismatch { left: self.0, right: den });
            }
        }
        self.element(num)
    }

    /// Formats a numerator the way elements are printed: `0`, `1` or `j/n`.
    pub fn show(self, num: u32) -> String {
        if num == 0 {
            "0".to_string()
        } else if num == self.0 {
            "1".to_string()
        } else {
            format!("{num}/{}", self.0)
        }
    }

    pub(crate) fn check_same(self, other: Valence) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(LmnError::ValenceMismatch { left: self.0, right: other.0 })
        }
    }

    pub(crate) fn check_delta(self, i: u32) -> Result<()> {
        if (1..=self.0).contains(&i) {
            Ok(())
        } else {
            Err(LmnError::IndexOutOfRange { op: "D", index: i, n: self.0 })
        }
    }

    pub(crate) fn check_jay(self, i: u32) -> Result<()> {
        if i <= self.0 {
            Ok(())
        } else {
            Err(LmnError::IndexOutOfRange { op: "J", index: i, n: self.0 })
        }
    }
}

impl TryFrom<u32> for Valence {
    type Error = LmnError;

    fn try_from(n: u32) -> Result<Self> {
        Valence::new(n)
    }
}

impl From<Valence> for u32 {
    fn from(v: Valence) -> u32 {
        v.0
    }
}

impl fmt::Display for Valence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element `j/n` of the standard carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    num: u32,
    valence: Valence,
}

impl Element {
    #[inline]
    pub fn numerator(self) -> u32 {
        self.num
    }

    #[inline]
    pub fn valence(self) -> Valence {
        self.valence
    }

    pub fn is_bottom(self) -> bool {
        self.num == 0
    }

    pub fn is_top(self) -> bool {
        self.num == self.valence.0
    }

    pub fn join(self, other: Element) -> Result<Element> {
        self.valence.check_same(other.valence)?;
        Ok(Element { num: self.num.max(other.num), ..self })
    }

    pub fn meet(self, other: Element) -> Result<Element> {
        self.valence.check_same(other.valence)?;
        Ok(Element { num: self.num.min(other.num), ..self })
    }


    /// `Δ_i`, for `1 <= i <= n`.
    pub fn delta(self, i: u32) -> Result<Element> {
        self.valence.check_delta(i)?;
        Ok(Element { num: Standard(self.valence).delta(i, self.num), ..self })
    }

    /// `J_i`, for `0 <= i <= n`, computed from its definition in terms of
    /// `Δ`, `N` and `∧`.
    pub fn jay(self, i: u32) -> Result<Element> {
        self.valence.check_jay(i)?;
        Ok(Element { num: jay_in(&Standard(self.valence), i, self.num), ..self })
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element { num: self.valence.0 - self.num, ..self }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.valence.show(self.num))
    }
}

/// Operation tables of an algebra whose carrier is the numerator range
/// `0..=n`.
///
/// The standard algebra is [`Standard`]; the trait exists so that the axiom
/// checker and the closure computation can be run against modified tables.
/// Callers guarantee arguments are in range.
pub trait NuancedChain {
    fn valence(&self) -> Valence;
    fn join(&self, a: u32, b: u32) -> u32;
    fn meet(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    fn delta(&self, i: u32, a: u32) -> u32;
}

/// The standard algebra `𝓛_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Standard(pub Valence);

impl NuancedChain for Standard {
    #[inline]
    fn valence(&self) -> Valence {
        self.0
    }

    #[inline]
    fn join(&self, a: u32, b: u32) -> u32 {
        a.max(b)
    }

    #[inline]
    fn meet(&self, a: u32, b: u32) -> u32 {
        a.min(b)
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        self.0 .0 - a
    }

    #[inline]
    fn delta(&self, i: u32, a: u32) -> u32 {
        let n = self.0 .0;
        if i + a > n {
            n
        } else {
            0
        }
    }
}

/// `J_i(x) = Δ_{n-i+1}(x) ∧ NΔ_{n-i}(x)`, with `J_n = Δ_1` and `J_0 = NΔ_n`.
pub fn jay_in<A: NuancedChain + ?Sized>(alg: &A, i: u32, a: u32) -> u32 {
    let n = alg.valence().n();
    if i == n {
        alg.delta(1, a)
    } else if i == 0 {
        alg.neg(alg.delta(n, a))
    } else {
        alg.meet(alg.delta(n - i + 1, a), alg.neg(alg.delta(n - i, a)))
    }
}

/// The axiom groups checked by [`verify_axioms`]: the two De Morgan laws
/// and the six LM_n nuance axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    /// `NNx = x`
    Involution,
    /// `N(x ∨ y) = Nx ∧ Ny`
    DeMorgan,
    /// `Δ_i(x ∨ y) = Δ_i x ∨ Δ_i y`
    NuanceJoin,
    /// `Δ_i x ∨ NΔ_i x = 1`
    NuanceComplement,
    /// `Δ_i Δ_j x = Δ_j x`
    NuanceIdempotent,
    /// `Δ_i Nx = NΔ_{n+1-i} x`
    NuanceNegation,
    /// `i <= j` implies `Δ_i x <= Δ_j x`
    NuanceMonotone,
    /// equal nuances everywhere implies equal elements
    Determination,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Involution,
        Axiom::DeMorgan,
        Axiom::NuanceJoin,
        Axiom::NuanceComplement,
        Axiom::NuanceIdempotent,
        Axiom::NuanceNegation,
        Axiom::NuanceMonotone,
        Axiom::Determination,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::Involution => "De Morgan (i)   NNx = x",
            Axiom::DeMorgan => "De Morgan (ii)  N(x | y) = Nx & Ny",
            Axiom::NuanceJoin => "LM (i)    Di(x | y) = Di(x) | Di(y)",
            Axiom::NuanceComplement => "LM (ii)   Di(x) | NDi(x) = 1",
            Axiom::NuanceIdempotent => "LM (iii)  DiDj(x) = Dj(x)",
            Axiom::NuanceNegation => "LM (iv)   DiN(x) = NDn+1-i(x)",
            Axiom::NuanceMonotone => "LM (v)    i <= j => Di(x) <= Dj(x)",
            Axiom::Determination => "LM (vi)   Dk(x) = Dk(y) for all k => x = y",
        }
    }
}

/// A falsifying instance: the nuance indices and carrier numerators involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomWitness {
    pub nuances: Vec<u32>,
    pub elements: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub counterexample: Option<AxiomWitness>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub valence: Valence,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn result(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is reported")
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.result(axiom).passed()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.valence;
        writeln!(f, "axioms of the standard LM_{v}-algebra ({} elements)", v.carrier_size())?;
        for r in &self.results {
            match &r.counterexample {
                None => writeln!(f, "  pass  {}", r.axiom.label())?,
                Some(w) => {
                    let els: Vec<String> = w.elements.iter().map(|&e| v.show(e)).collect();
                    let idx: Vec<String> = w.nuances.iter().map(u32::to_string).collect();
                    writeln!(
                        f,
                        "  FAIL  {}  [indices ({}) elements ({})]",
                        r.axiom.label(),
                        idx.join(","),
                        els.join(",")
                    )?
                }
            }
        }
        let passed = self.results.iter().filter(|r| r.passed()).count();
        if self.all_pass() {
            write!(f, "all {passed} axiom groups pass")
        } else {
            write!(f, "{passed} of {} axiom groups pass", self.results.len())
        }
    }
}

/// Exhaustively checks the De Morgan and LM_n axioms on the standard algebra.
pub fn verify_axioms(v: Valence) -> AxiomReport {
    verify_axioms_of(&Standard(v))
}

/// Exhaustively checks the axioms against arbitrary operation tables.
pub fn verify_axioms_of<A: NuancedChain + ?Sized>(alg: &A) -> AxiomReport {
    let v = alg.valence();
    let n = v.n();
    let carrier = 0..=n;
    let nuances = 1..=n;
    let mut results = Vec::with_capacity(Axiom::ALL.len());

    let witness = |nuances: &[u32], elements: &[u32]| AxiomWitness {
        nuances: nuances.to_vec(),
        elements: elements.to_vec(),
    };

    let involution = carrier
        .clone()
        .find(|&x| alg.neg(alg.neg(x)) != x)
        .map(|x| witness(&[], &[x]));
    results.push(AxiomResult { axiom: Axiom::Involution, counterexample: involution });

    let de_morgan = pairs(n)
        .find(|&(x, y)| alg.neg(alg.join(x, y)) != alg.meet(alg.neg(x), alg.neg(y)))
        .map(|(x, y)| witness(&[], &[x, y]));
    results.push(AxiomResult { axiom: Axiom::DeMorgan, counterexample: de_morgan });

    let nuance_join = nuances
        .clone()
        .flat_map(|i| pairs(n).map(move |(x, y)| (i, x, y)))
        .find(|&(i, x, y)| alg.delta(i, alg.join(x, y)) != alg.join(alg.delta(i, x), alg.delta(i, y)))
        .map(|(i, x, y)| witness(&[i], &[x, y]));
    results.push(AxiomResult { axiom: Axiom::NuanceJoin, counterexample: nuance_join });

    let complement = nuances
        .clone()
        .flat_map(|i| carrier.clone().map(move |x| (i, x)))
        .find(|&(i, x)| alg.join(alg.delta(i, x), alg.neg(alg.delta(i, x))) != n)
        .map(|(i, x)| witness(&[i], &[x]));
    results.push(AxiomResult { axiom: Axiom::NuanceComplement, counterexample: complement });

    let idempotent = pairs_from(1, n)
        .flat_map(|(i, j)| carrier.clone().map(move |x| (i, j, x)))
        .find(|&(i, j, x)| alg.delta(i, alg.delta(j, x)) != alg.delta(j, x))
        .map(|(i, j, x)| witness(&[i, j], &[x]));
    results.push(AxiomResult { axiom: Axiom::NuanceIdempotent, counterexample: idempotent });

    let negation = nuances
        .clone()
        .flat_map(|i| carrier.clone().map(move |x| (i, x)))
        .find(|&(i, x)| alg.delta(i, alg.neg(x)) != alg.neg(alg.delta(n + 1 - i, x)))
        .map(|(i, x)| witness(&[i], &[x]));
    results.push(AxiomResult { axiom: Axiom::NuanceNegation, counterexample: negation });

    let monotone = pairs_from(1, n)
        .filter(|&(i, j)| i <= j)
        .flat_map(|(i, j)| carrier.clone().map(move |x| (i, j, x)))
        .find(|&(i, j, x)| alg.delta(i, x) > alg.delta(j, x))
        .map(|(i, j, x)| witness(&[i, j], &[x]));
    results.push(AxiomResult { axiom: Axiom::NuanceMonotone, counterexample: monotone });

    let determination = pairs(n)
        .filter(|&(x, y)| x != y)
        .find(|&(x, y)| (1..=n).all(|k| alg.delta(k, x) == alg.delta(k, y)))
        .map(|(x, y)| witness(&[], &[x, y]));
    results.push(AxiomResult { axiom: Axiom::Determination, counterexample: determination });

    AxiomReport { valence: v, results }
}

fn pairs(n: u32) -> impl Iterator<Item = (u32, u32)> + Clone {
    pairs_from(0, n)
}

fn pairs_from(lo: u32, hi: u32) -> impl Iterator<Item = (u32, u32)> + Clone {
    (lo..=hi).flat_map(move |x| (lo..=hi).map(move |y| (x, y)))
}

/// A subset of the carrier closed under every operation of the algebra.
///
/// On a chain, closure under `∨` and `∧` is automatic and every `Δ_i`
/// lands in `{0, 1}`, so the checked invariants are: contains `0` and `n`,
/// and symmetric under `j ↦ n - j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subalgebra {
    valence: Valence,
    members: Vec<u32>,
}

impl Subalgebra {
    pub fn new(valence: Valence, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        let n = valence.n();
        let set: BTreeSet<u32> = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&j| j > n) {
            return Err(LmnError::ElementOutOfRange { num: bad, n });
        }
        if !set.contains(&0) || !set.contains(&n) {
            return Err(LmnError::NotSubalgebra("must contain 0 and 1".into()));
        }
        if let Some(&j) = set.iter().find(|&&j| !set.contains(&(n - j))) {
            return Err(LmnError::NotSubalgebra(format!(
                "contains {} but not its negation {}",
                valence.show(j),
                valence.show(n - j)
            )));
        }
        Ok(Subalgebra { valence, members: set.into_iter().collect() })
    }

    fn from_mask(valence: Valence, mask: &[bool]) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(j, _)| j as u32)
            .collect();
        Subalgebra { valence, members }
    }

    pub fn valence(&self) -> Valence {
        self.valence
    }

    /// Numerators in strictly increasing order.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, num: u32) -> bool {
        self.members.binary_search(&num).is_ok()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().map(|&num| Element { num, valence: self.valence })
    }

    /// Checks closure under every operation of the standard algebra directly.
    pub fn is_closed(&self) -> bool {
        let alg = Standard(self.valence);
        let n = self.valence.n();
        self.members.iter().all(|&a| {
            self.contains(alg.neg(a))
                && (1..=n).all(|i| self.contains(alg.delta(i, a)))
                && self
                    .members
                    .iter()
                    .all(|&b| self.contains(alg.join(a, b)) && self.contains(alg.meet(a, b)))
        })
    }
}

impl PartialOrd for Subalgebra {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Cardinality first, then lexicographic on members.
impl Ord for Subalgebra {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.valence, self.members.len(), &self.members).cmp(&(
            other.valence,
            other.members.len(),
            &other.members,
        ))
    }
}

impl fmt::Display for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|&j| self.valence.show(j)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn uniform_valence(elements: &[Element]) -> Result<Option<Valence>> {
    let Some(first) = elements.first() else {
        return Ok(None);
    };
    for e in elements {
        first.valence.check_same(e.valence)?;
    }
    Ok(Some(first.valence))
}

/// `{0, 1, a_1, ..., a_r, 1 - a_1, ..., 1 - a_r}`.
pub fn minimal_subalgebra(tuple: &[Element]) -> Result<Subalgebra> {
    let v = uniform_valence(tuple)?.ok_or(LmnError::EmptyTuple)?;
    let nums: Vec<u32> = tuple.iter().map(|e| e.num).collect();
    Ok(minimal_subalgebra_raw(v, &nums))
}

pub(crate) fn minimal_subalgebra_raw(v: Valence, tuple: &[u32]) -> Subalgebra {
    let n = v.n();
    let mut mask = vec![false; v.carrier_size()];
    mask[0] = true;
    mask[n as usize] = true;
    for &a in tuple {
        mask[a as usize] = true;
        mask[(n - a) as usize] = true;
    }
    Subalgebra::from_mask(v, &mask)
}

/// Whether `out` lies in the minimal subalgebra of `tuple`, without building it.
#[inline]
pub(crate) fn in_minimal_subalgebra(n: u32, tuple: &[u32], out: u32) -> bool {
    out == 0 || out == n || tuple.iter().any(|&a| a == out || n - a == out)
}

/// The least subset containing `seed`, `0` and `1` that is closed under
/// every operation, computed by fixpoint iteration.
///
/// All elements of `seed` must share `v`.
pub fn generated_subalgebra(v: Valence, seed: &[Element]) -> Result<Subalgebra> {
    if let Some(sv) = uniform_valence(seed)? {
        v.check_same(sv)?;
    }
    let nums: Vec<u32> = seed.iter().map(|e| e.num).collect();
    Ok(generated_in(&Standard(v), &nums))
}

/// Fixpoint closure of `seed ∪ {0, n}` under the given operation tables.
pub fn generated_in<A: NuancedChain + ?Sized>(alg: &A, seed: &[u32]) -> Subalgebra {
    let v = alg.valence();
    let n = v.n();
    let mut mask = vec![false; v.carrier_size()];
    let mut members: Vec<u32> = Vec::new();
    let push = |x: u32, mask: &mut Vec<bool>, members: &mut Vec<u32>| {
        if !mask[x as usize] {
            mask[x as usize] = true;
            members.push(x);
        }
    };
    push(0, &mut mask, &mut members);
    push(n, &mut mask, &mut members);
    for &s in seed {
        push(s, &mut mask, &mut members);
    }
    // Semi-naive: each round only combines pairs involving something new.
    let mut done = 0;
    while done < members.len() {
        let frontier = members.len();
        for idx in done..frontier {
            let a = members[idx];
            let mut fresh = vec![alg.neg(a)];
            fresh.extend((1..=n).map(|i| alg.delta(i, a)));
            for &b in &members[..frontier] {
                fresh.push(alg.join(a, b));
                fresh.push(alg.meet(a, b));
            }
            for x in fresh {
                push(x, &mut mask, &mut members);
            }
        }
        done = frontier;
    }
    Subalgebra::from_mask(v, &mask)
}

/// Every subalgebra of the standard algebra at `v`, ordered by cardinality
/// and then lexicographically.
///
/// Subalgebras are exactly the negation-symmetric subsets containing the
/// bounds, so this enumerates choices of a subset of
/// `{1, ..., floor((n-1)/2)}` plus, for even `n`, whether to include the
/// midpoint `n/2`. The count is `2^ceil((n-1)/2)`, so `n` must be below 128.
pub fn enumerate_subalgebras(v: Valence) -> Vec<Subalgebra> {
    let n = v.n();
    let mut free: Vec<u32> = (1..).take_while(|&j| 2 * j < n).collect();
    if n.is_multiple_of(2) {
        free.push(n / 2);
    }
    assert!(free.len() < 64, "too many subalgebras to enumerate at n = {n}");
    let mut out: Vec<Subalgebra> = (0..1u64 << free.len())
        .map(|choice| {
            let mut mask = vec![false; v.carrier_size()];
            mask[0] = true;
            mask[n as usize] = true;
            for (bit, &j) in free.iter().enumerate() {
                if choice >> bit & 1 == 1 {
                    mask[j as usize] = true;
                    mask[(n - j) as usize] = true;
                }
            }
            Subalgebra::from_mask(v, &mask)
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(n: u32) -> Valence {
        Valence::new(n).unwrap()
    }

    fn el(n: u32, j: u32) -> Element {
        v(n).element(j).unwrap()
    }

    #[test]
    fn valence_rejects_small() {
        assert!(matches!(Valence::new(1), Err(LmnError::InvalidValence(1))));
        assert!(Valence::new(0).is_err());
        assert_eq!(v(2).carrier_size(), 3);
    }

    #[test]
    fn element_out_of_range() {
        assert!(matches!(
            v(4).element(5),
            Err(LmnError::ElementOutOfRange { num: 5, n: 4 })
        ));
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(el(4, 1).join(el(4, 3)).unwrap(), el(4, 3));
        assert_eq!(el(2, 1).join(el(2, 1)).unwrap(), el(2, 1));
        assert_eq!(el(4, 1).meet(el(4, 3)).unwrap(), el(4, 1));
        assert_eq!(el(3, 2).meet(el(3, 2)).unwrap(), el(3, 2));
        for x in v(4).elements() {
            assert_eq!(v(4).bottom().join(x).unwrap(), x);
            assert_eq!(v(4).top().meet(x).unwrap(), x);
        }
    }

    #[test]
    fn valence_mismatch_is_an_error() {
        assert!(matches!(
            el(4, 1).join(el(3, 1)),
            Err(LmnError::ValenceMismatch { left: 4, right: 3 })
        ));
        assert!(el(4, 1).meet(el(2, 1)).is_err());
    }

    #[test]
    fn neg_examples() {
        assert_eq!(el(4, 1).neg(), el(4, 3));
        assert_eq!(el(2, 1).neg(), el(2, 1));
        for x in v(4).elements() {
            assert_eq!(x.neg().neg(), x);
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(el(4, 3).delta(1).unwrap(), el(4, 0));
        assert_eq!(el(4, 3).delta(2).unwrap(), el(4, 4));
        for n in 2..=8 {
            for i in 1..=n {
                assert!(v(n).top().delta(i).unwrap().is_top());
                assert!(v(n).bottom().delta(i).unwrap().is_bottom());
            }
        }
        assert!(matches!(
            el(4, 1).delta(0),
            Err(LmnError::IndexOutOfRange { op: "D", index: 0, n: 4 })
        ));
        assert!(el(4, 1).delta(5).is_err());
    }

    #[test]
    fn jay_examples() {
        assert!(el(4, 2).jay(2).unwrap().is_top());
        assert!(el(4, 3).jay(2).unwrap().is_bottom());
        for n in 2..=8 {
            assert!(v(n).top().jay(n).unwrap().is_top());
        }
        for i in 0..=3 {
            for j in 0..=3 {
                let expected = if i == j { 3 } else { 0 };
                assert_eq!(el(3, j).jay(i).unwrap().numerator(), expected, "J{i}({j}/3)");
            }
        }
        assert!(el(3, 1).jay(4).is_err());
    }

    #[test]
    fn jay_partitions_the_carrier() {
        for n in 2..=8 {
            let alg = Standard(v(n));
            for a in 0..=n {
                let fired: Vec<u32> = (0..=n).filter(|&i| jay_in(&alg, i, a) == n).collect();
                assert_eq!(fired, vec![a]);
                let all = (0..=n).fold(0, |acc, i| alg.join(acc, jay_in(&alg, i, a)));
                assert_eq!(all, n);
                for i in 0..=n {
                    for k in 0..=n {
                        if i != k {
                            assert_eq!(alg.meet(jay_in(&alg, i, a), jay_in(&alg, k, a)), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_hold_up_to_eight() {
        for n in 2..=8 {
            let report = verify_axioms(v(n));
            assert!(report.all_pass(), "{report}");
            assert_eq!(report.results.len(), 8);
        }
    }

    /// Standard tables with one nuance replaced by another.
    struct ReplacedDelta {
        base: Standard,
        target: u32,
        source: u32,
    }

    impl NuancedChain for ReplacedDelta {
        fn valence(&self) -> Valence {
            self.base.valence()
        }
        fn join(&self, a: u32, b: u32) -> u32 {
            self.base.join(a, b)
        }
        fn meet(&self, a: u32, b: u32) -> u32 {
            self.base.meet(a, b)
        }
        fn neg(&self, a: u32) -> u32 {
            self.base.neg(a)
        }
        fn delta(&self, i: u32, a: u32) -> u32 {
            let i = if i == self.target { self.source } else { i };
            self.base.delta(i, a)
        }
    }

    #[test]
    fn corrupted_delta_one_breaks_determination() {
        // Δ_1 := Δ_n at n = 3: 2/3 and 1 become indistinguishable.
        let alg = ReplacedDelta { base: Standard(v(3)), target: 1, source: 3 };
        let report = verify_axioms_of(&alg);
        assert!(!report.passed(Axiom::Determination));
        assert_eq!(
            report.result(Axiom::Determination).counterexample.as_ref().unwrap().elements,
            vec![2, 3]
        );
        // Δ_1 now exceeds Δ_2 at 1/3, so monotonicity is lost as well.
        assert!(!report.passed(Axiom::NuanceMonotone));
        assert!(report.passed(Axiom::Involution));
        assert!(report.passed(Axiom::NuanceComplement));
    }

    #[test]
    fn collapsed_nuance_keeps_monotonicity_but_breaks_determination() {
        let alg = ReplacedDelta { base: Standard(v(3)), target: 1, source: 2 };
        let report = verify_axioms_of(&alg);
        assert!(report.passed(Axiom::NuanceMonotone));
        assert!(!report.passed(Axiom::Determination));
    }

    #[test]
    fn minimal_subalgebra_examples() {
        let m = minimal_subalgebra(&[el(4, 3), el(4, 1)]).unwrap();
        assert_eq!(m.members(), &[0, 1, 3, 4]);
        assert_eq!(minimal_subalgebra(&[el(3, 0)]).unwrap().members(), &[0, 3]);
        assert_eq!(minimal_subalgebra(&[el(5, 2)]).unwrap().members(), &[0, 2, 3, 5]);
        assert!(matches!(minimal_subalgebra(&[]), Err(LmnError::EmptyTuple)));
        assert!(minimal_subalgebra(&[el(4, 1), el(3, 1)]).is_err());
    }

    #[test]
    fn generated_subalgebra_examples() {
        let g = generated_subalgebra(v(3), &[el(3, 1)]).unwrap();
        assert_eq!(g.members(), &[0, 1, 2, 3]);
        let g = generated_subalgebra(v(5), &[el(5, 1)]).unwrap();
        assert_eq!(g.members(), &[0, 1, 4, 5]);
        assert!(!g.contains(2));
        for n in 2..=7 {
            assert_eq!(generated_subalgebra(v(n), &[]).unwrap().members(), &[0, n]);
        }
        assert!(generated_subalgebra(v(3), &[el(4, 1)]).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let subs = enumerate_subalgebras(v(3));
        let shown: Vec<String> = subs.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["{0,1}", "{0,1/3,2/3,1}"]);

        let subs = enumerate_subalgebras(v(5));
        let sizes: Vec<usize> = subs.iter().map(Subalgebra::len).collect();
        assert_eq!(sizes, [2, 4, 4, 6]);

        let shown: Vec<String> = enumerate_subalgebras(v(2)).iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["{0,1}", "{0,1/2,1}"]);
    }

    #[test]
    fn enumeration_matches_closure_characterization() {
        for n in 2..=6 {
            let listed: BTreeSet<Vec<u32>> =
                enumerate_subalgebras(v(n)).iter().map(|s| s.members().to_vec()).collect();
            // every subset of the carrier that is a closure fixpoint
            let mut closed = BTreeSet::new();
            for mask in 0u32..1 << (n + 1) {
                let subset: Vec<u32> = (0..=n).filter(|j| mask >> j & 1 == 1).collect();
                if generated_in(&Standard(v(n)), &subset).members() == subset.as_slice() {
                    closed.insert(subset);
                }
            }
            assert_eq!(listed, closed, "n = {n}");
        }
    }

    #[test]
    fn odd_counts_are_powers_of_two() {
        for n in [3u32, 5, 7, 9, 11] {
            assert_eq!(enumerate_subalgebras(v(n)).len(), 1 << ((n - 1) / 2));
        }
    }

    #[test]
    fn enumerated_sets_satisfy_invariants() {
        for n in 2..=9 {
            for s in enumerate_subalgebras(v(n)) {
                assert!(s.is_closed(), "{s}");
                assert!(Subalgebra::new(v(n), s.members().iter().copied()).is_ok());
                if n % 2 == 1 {
                    assert_eq!(s.len() % 2, 0);
                }
            }
        }
    }

    #[test]
    fn subalgebra_new_validates() {
        assert!(Subalgebra::new(v(4), [0, 1, 4]).is_err());
        assert!(Subalgebra::new(v(4), [1, 3]).is_err());
        assert!(Subalgebra::new(v(4), [0, 5, 4]).is_err());
        let s = Subalgebra::new(v(4), [4, 0, 3, 1, 1]).unwrap();
        assert_eq!(s.members(), &[0, 1, 3, 4]);
    }

    #[test]
    fn minimal_equals_generated_exhaustively() {
        for n in 2..=5 {
            let vn = v(n);
            let m = n + 1;
            for r in 1..=3u32 {
                for idx in 0..m.pow(r) {
                    let tuple: Vec<Element> = (0..r)
                        .map(|p| el(n, idx / m.pow(r - 1 - p) % m))
                        .collect();
                    assert_eq!(
                        minimal_subalgebra(&tuple).unwrap(),
                        generated_subalgebra(vn, &tuple).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn parse_and_show_elements() {
        let v4 = v(4);
        assert_eq!(v4.parse_element("3/4").unwrap(), el(4, 3));
        assert_eq!(v4.parse_element("2").unwrap(), el(4, 2));
        assert!(v4.parse_element("1/3").is_err());
        assert!(v4.parse_element("5").is_err());
        assert!(v4.parse_element("x").is_err());
        assert_eq!(el(4, 0).to_string(), "0");
        assert_eq!(el(4, 4).to_string(), "1");
        assert_eq!(el(4, 2).to_string(), "2/4");
    }

    proptest! {
        #[test]
        fn monotone_nuances(n in 2u32..=12, seed in any::<u32>()) {
            let alg = Standard(v(n));
            let x = seed % (n + 1);
            for i in 1..=n {
                for j in i..=n {
                    prop_assert!(alg.delta(i, x) <= alg.delta(j, x));
                }
            }
        }

        #[test]
        fn lattice_laws(n in 2u32..=12, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
            let (a, b, c) = (el(n, a % (n + 1)), el(n, b % (n + 1)), el(n, c % (n + 1)));
            let lhs = a.meet(b.join(c).unwrap()).unwrap();
            let rhs = a.meet(b).unwrap().join(a.meet(c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(a.join(b).unwrap().neg(), a.neg().meet(b.neg()).unwrap());
        }
    }
}
