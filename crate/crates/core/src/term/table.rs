use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::algebra::Valence;
use crate::error::{LmnError, Result};

/// A total function `L^r -> L`, stored as numerators in tuple order.
///
/// The tuple `(a_1, ..., a_r)` sits at index `Σ a_i (n+1)^(r-i)`: `x_1` is
/// the most significant digit and `x_r` varies fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    valence: Valence,
    arity: usize,
    outputs: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: u32,
    arity: usize,
    outputs: Vec<u32>,
}

pub(crate) fn table_len(v: Valence, arity: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|r| v.carrier_size().checked_pow(r))
        .ok_or_else(|| LmnError::InvalidTable(format!("(n+1)^r overflows for n = {v}, r = {arity}")))
}

/// Digits of the tuple at `index`, `x_1` first.
pub fn tuple_at(v: Valence, arity: usize, mut index: usize) -> Vec<u32> {
    let base = v.carrier_size();
    let mut tuple = vec![0; arity];
    for slot in tuple.iter_mut().rev() {
        *slot = (index % base) as u32;
        index /= base;
    }
    tuple
}

pub fn tuple_index(v: Valence, tuple: &[u32]) -> usize {
    let base = v.carrier_size();
    tuple.iter().fold(0, |acc, &a| acc * base + a as usize)
}

/// All tuples of `L^r` in table order.
#[derive(Clone, Debug)]
pub struct Tuples {
    n: u32,
    next: Option<Vec<u32>>,
}

impl Tuples {
    pub fn new(v: Valence, arity: usize) -> Self {
        Tuples { n: v.n(), next: Some(vec![0; arity]) }
    }
}

impl Iterator for Tuples {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ[pos] < self.n {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    }
}

impl TruthTable {
    pub fn new(valence: Valence, arity: usize, outputs: Vec<u32>) -> Result<Self> {
        if arity == 0 {
            return Err(LmnError::InvalidTable("arity must be at least 1".into()));
        }
        let len = table_len(valence, arity)?;
        if outputs.len() != len {
            return Err(LmnError::InvalidTable(format!(
                "expected {len} outputs for n = {valence}, r = {arity}, got {}",
                outputs.len()
            )));
        }
        if let Some(pos) = outputs.iter().position(|&o| o > valence.n()) {
            return Err(LmnError::InvalidTable(format!(
                "output {} at index {pos} exceeds n = {valence}",
                outputs[pos]
            )));
        }
        Ok(TruthTable { valence, arity, outputs })
    }

    /// Tabulates an arbitrary function of the input numerators.
    pub fn from_fn(valence: Valence, arity: usize, mut f: impl FnMut(&[u32]) -> u32) -> Result<Self> {
        let outputs = Tuples::new(valence, arity).map(|t| f(&t)).collect();
        TruthTable::new(valence, arity, outputs)
    }

    pub fn valence(&self) -> Valence {
        self.valence
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn outputs(&self) -> &[u32] {
        &self.outputs
    }

    pub fn len(&self) -> usize {
        self.outputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outputs.is_empty()
    }

    pub fn get(&self, tuple: &[u32]) -> u32 {
        self.outputs[tuple_index(self.valence, tuple)]
    }

    /// `(tuple, output)` pairs in table order.
    pub fn rows(&self) -> impl Iterator<Item = (Vec<u32>, u32)> + '_ {
        Tuples::new(self.valence, self.arity).zip(self.outputs.iter().copied())
    }

    pub fn to_json(&self) -> String {
        let wire = TableJson { n: self.valence.n(), arity: self.arity, outputs: self.outputs.clone() };
        serde_json::to_string(&wire).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: TableJson = serde_json::from_str(text)?;
        TruthTable::new(Valence::new(wire.n)?, wire.arity, wire.outputs)
    }

    /// Header `x1,...,xr,f`, then one row of numerators per tuple.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header: Vec<String> = (1..=self.arity).map(|k| format!("x{k}")).collect();
        header.push("f".into());
        w.write_record(&header)?;
        for (tuple, out) in self.rows() {
            let mut record: Vec<String> = tuple.iter().map(u32::to_string).collect();
            record.push(out.to_string());
            w.write_record(&record)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is ascii")
    }

    /// Reads the CSV layout written by [`TruthTable::write_csv`]. The file
    /// does not record `n`; it is recovered from the row count, and every
    /// row's inputs must match the table order.
    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let bad = |msg: String| LmnError::InvalidTable(msg);
        let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
        let header = r.headers()?.clone();
        let arity = header.len().checked_sub(1).filter(|&a| a > 0).ok_or_else(|| {
            bad("header must be x1,...,xr,f with r >= 1".into())
        })?;
        for (k, name) in header.iter().take(arity).enumerate() {
            if name != format!("x{}", k + 1) {
                return Err(bad(format!("unexpected column {name:?}, expected x{}", k + 1)));
            }
        }
        if &header[arity] != "f" {
            return Err(bad(format!("last column must be f, got {:?}", &header[arity])));
        }
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for rec in r.records() {
            let rec = rec?;
            let row = rec
                .iter()
                .map(|s| s.parse::<u32>().map_err(|_| bad(format!("not a numerator: {s:?}"))))
                .collect::<Result<Vec<u32>>>()?;
            if row.len() != arity + 1 {
                return Err(bad(format!("row has {} fields, expected {}", row.len(), arity + 1)));
            }
            rows.push(row);
        }
        let base = (2u32..)
            .take_while(|b| (*b as usize).checked_pow(arity as u32).is_some_and(|p| p <= rows.len()))
            .find(|b| (*b as usize).pow(arity as u32) == rows.len())
            .ok_or_else(|| bad(format!("{} rows is not (n+1)^{arity} for any n >= 2", rows.len())))?;
        let v = Valence::new(base - 1)?;
        let mut outputs = Vec::with_capacity(rows.len());
        for (expected, row) in Tuples::new(v, arity).zip(&rows) {
            if row[..arity] != expected[..] {
                return Err(bad(format!("row {row:?} is out of order, expected inputs {expected:?}")));
            }
            outputs.push(row[arity]);
        }
        TruthTable::new(v, arity, outputs)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        TruthTable::read_csv(text.as_bytes())
    }
}
