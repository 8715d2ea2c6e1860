//! Cardinality and product structure of the free LM_n-algebra on `r`
//! generators.
//!
//! The free algebra is the algebra of representable tables, and each table
//! row is constrained independently to its tuple's subalgebra, so
//! `|F_n(r)| = Π_A |A|^α(r, A)` with `α(r, A)` the number of `r`-tuples that
//! generate `A`. For odd `n`, `α` depends only on `|A| = 2k` and has a
//! closed inclusion-exclusion form; see [`alpha_formula`].
//!
//! The counting functions are generic over the scalar they accumulate in;
//! use [`Count`](crate::Count) for exact results.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::{enumerate_subalgebras, generated_in, minimal_subalgebra_raw, Standard, Subalgebra, Valence};
use crate::error::{LmnError, Result};
use crate::term::Tuples;
use crate::Count;

/// Scalars the counting routines can accumulate in: exact integers
/// (`u64`, `u128`, `BigUint`, `BigInt`) or floats for magnitude estimates.
pub trait CountScalar:
    Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + PartialOrd + From<u32>
{
}

impl<T> CountScalar for T where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + PartialOrd + From<u32>
{
}

fn pow<T: CountScalar>(base: T, exp: u64) -> T {
    let mut acc = T::one();
    let mut base = base;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base.clone();
        }
        exp >>= 1;
        if exp > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

fn binomial_row<T: CountScalar>(m: u32) -> Vec<T> {
    let mut row = vec![T::one()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(T::one());
        for w in row.windows(2) {
            next.push(w[0].clone() + w[1].clone());
        }
        next.push(T::one());
        row = next;
    }
    row
}

/// `α(r, k) = 2^r Σ_{i=0}^{k-1} (-1)^i C(k-1, i) (k-i)^r`: the number of
/// `r`-tuples generating a given `2k`-element subalgebra when `n` is odd.
///
/// Positive and negative terms are summed separately, so unsigned scalars
/// work as long as they do not overflow.
pub fn alpha_formula<T: CountScalar>(r: u32, k: u32) -> T {
    if k == 0 {
        return T::zero();
    }
    let binom = binomial_row::<T>(k - 1);
    let (mut plus, mut minus) = (T::zero(), T::zero());
    for (i, c) in binom.into_iter().enumerate() {
        let term = c * pow(T::from(k - i as u32), r as u64);
        if i % 2 == 0 {
            plus = plus + term;
        } else {
            minus = minus + term;
        }
    }
    pow(T::from(2), r as u64) * (plus - minus)
}

/// How many `r`-tuples generate each subalgebra, by closure of every tuple.
///
/// Closures are memoized on the sorted, deduplicated seed. Subalgebras
/// generated by no tuple are absent from the map.
pub fn alpha_table(v: Valence, r: usize) -> BTreeMap<Subalgebra, u64> {
    let alg = Standard(v);
    let mut memo: HashMap<Vec<u32>, Subalgebra> = HashMap::new();
    let mut counts: BTreeMap<Subalgebra, u64> = BTreeMap::new();
    for tuple in Tuples::new(v, r) {
        let mut key = tuple;
        key.sort_unstable();
        key.dedup();
        let sub = memo.entry(key).or_insert_with_key(|seed| generated_in(&alg, seed));
        *counts.entry(sub.clone()).or_insert(0) += 1;
    }
    counts
}

/// `α(r, A)`: the number of tuples in `L^r` whose generated subalgebra is `A`.
pub fn alpha_bruteforce(v: Valence, r: usize, sub: &Subalgebra) -> Result<u64> {
    v.check_same(sub.valence())?;
    if !sub.is_closed() {
        return Err(LmnError::NotSubalgebra(sub.to_string()));
    }
    Ok(alpha_table(v, r).get(sub).copied().unwrap_or(0))
}

/// `Π over tuples of |minimal subalgebra of the tuple|`: the number of
/// representable `r`-ary tables.
pub fn count_representable<T: CountScalar>(v: Valence, r: usize) -> T {
    let mut histogram: BTreeMap<u32, u64> = BTreeMap::new();
    for tuple in Tuples::new(v, r) {
        *histogram.entry(minimal_subalgebra_raw(v, &tuple).len() as u32).or_insert(0) += 1;
    }
    histogram
        .into_iter()
        .fold(T::one(), |acc, (size, times)| acc * pow(T::from(size), times))
}

/// One `|A|^α` factor of the product decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub size: usize,
    pub exponent: u64,
}

/// Factors `(|A|, α(r, A))` for every subalgebra with `α > 0`, in
/// enumeration order, and their expanded product.
pub fn free_cardinality(v: Valence, r: usize) -> (Vec<Factor>, Count) {
    let alphas = alpha_table(v, r);
    let factors: Vec<Factor> = enumerate_subalgebras(v)
        .into_iter()
        .filter_map(|s| {
            let exponent = alphas.get(&s).copied().unwrap_or(0);
            (exponent > 0).then(|| Factor { size: s.len(), exponent })
        })
        .collect();
    let total = expand(&factors);
    (factors, total)
}

fn expand(factors: &[Factor]) -> Count {
    factors
        .iter()
        .fold(Count::one(), |acc, f| acc * pow(Count::from(f.size as u32), f.exponent))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub subalgebra: String,
    pub members: Vec<u32>,
    pub size: usize,
    pub alpha: u64,
    /// Closed-form `α(r, |A|/2)`; only for odd `n`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportChecks {
    /// `Σ α = (n+1)^r`
    pub partition: bool,
    /// `Π |A|^α` equals the per-tuple representable count
    pub cardinality: bool,
    /// closed form equals brute force on every row; `None` for even `n`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<bool>,
}

impl ReportChecks {
    pub fn all_pass(&self) -> bool {
        self.partition && self.cardinality && self.formula.unwrap_or(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeAlgebraReport {
    pub n: Valence,
    pub arity: usize,
    pub rows: Vec<ReportRow>,
    pub factors: Vec<Factor>,
    #[serde(serialize_with = "as_decimal")]
    pub cardinality: Count,
    #[serde(serialize_with = "as_decimal")]
    pub representable_count: Count,
    pub checks: ReportChecks,
}

fn as_decimal<S: Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

/// Assembles every row and cross-checks brute force, the product form, the
/// per-tuple count and (odd `n`) the closed form. Disagreements show up in
/// [`FreeAlgebraReport::checks`] rather than as errors.
pub fn free_report(v: Valence, r: usize) -> FreeAlgebraReport {
    let alphas = alpha_table(v, r);
    let odd = v.n() % 2 == 1;
    let rows: Vec<ReportRow> = enumerate_subalgebras(v)
        .into_iter()
        .map(|s| {
            let alpha = alphas.get(&s).copied().unwrap_or(0);
            let formula = odd.then(|| {
                alpha_formula::<Count>(r as u32, (s.len() / 2) as u32)
                    .to_u64()
                    .unwrap_or(u64::MAX)
            });
            ReportRow { subalgebra: s.to_string(), members: s.members().to_vec(), size: s.len(), alpha, formula }
        })
        .collect();
    let factors: Vec<Factor> = rows
        .iter()
        .filter(|row| row.alpha > 0)
        .map(|row| Factor { size: row.size, exponent: row.alpha })
        .collect();
    let cardinality = expand(&factors);
    let representable_count = count_representable::<Count>(v, r);

    let total_tuples = pow(Count::from(v.carrier_size() as u32), r as u64);
    let alpha_sum: Count = rows.iter().map(|row| Count::from(row.alpha)).sum();
    let checks = ReportChecks {
        partition: alpha_sum == total_tuples,
        cardinality: cardinality == representable_count,
        formula: odd.then(|| rows.iter().all(|row| row.formula == Some(row.alpha))),
    };
    FreeAlgebraReport { n: v, arity: r, rows, factors, cardinality, representable_count, checks }
}

impl FreeAlgebraReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `2^2 · 4^2 = 64`
    pub fn product_line(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| format!("{}^{}", f.size, f.exponent)).collect();
        let lhs = if parts.is_empty() { "1".to_string() } else { parts.join(" · ") };
        format!("{lhs} = {}", self.cardinality)
    }
}

impl fmt::Display for FreeAlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let odd = self.checks.formula.is_some();
        writeln!(f, "free LM_{}-algebra on {} generator(s)", self.n, self.arity)?;
        let width = self.rows.iter().map(|r| r.subalgebra.len()).max().unwrap_or(0).max(10);
        if odd {
            writeln!(f, "  {:<width$}  {:>4}  {:>10}  {:>10}", "subalgebra", "size", "alpha", "formula")?;
        } else {
            writeln!(f, "  {:<width$}  {:>4}  {:>10}", "subalgebra", "size", "alpha")?;
        }
        for row in &self.rows {
            write!(f, "  {:<width$}  {:>4}  {:>10}", row.subalgebra, row.size, row.alpha)?;
            if let Some(formula) = row.formula {
                write!(f, "  {formula:>10}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "|F| = {}", self.product_line())?;
        writeln!(f, "representable functions: {}", self.representable_count)?;
        let flag = |ok: bool| if ok { "ok" } else { "MISMATCH" };
        write!(
            f,
            "checks: partition {}, cardinality {}",
            flag(self.checks.partition),
            flag(self.checks.cardinality)
        )?;
        if let Some(formula) = self.checks.formula {
            write!(f, ", formula {}", flag(formula))?;
        }
        writeln!(f)?;
        write!(f, "{}", if self.checks.all_pass() { "consistent" } else { "INCONSISTENT" })
    }
}
