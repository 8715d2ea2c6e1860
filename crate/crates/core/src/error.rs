use thiserror::Error;

use crate::represent::Counterexample;

pub type Result<T> = std::result::Result<T, LmnError>;

#[derive(Debug, Error)]
pub enum LmnError {
    #[error("valence must be at least 2, got {0}")]
    InvalidValence(u32),

    #[error("numerator {num} is out of range for n = {n}")]
    ElementOutOfRange { num: u32, n: u32 },

    #[error("valence mismatch: n = {left} combined with n = {right}")]
    ValenceMismatch { left: u32, right: u32 },

    #[error("{op}{index} is out of range for n = {n}")]
    IndexOutOfRange { op: &'static str, index: u32, n: u32 },

    #[error("tuple must not be empty")]
    EmptyTuple,

    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable x{0} is not bound")]
    UnboundVariable(u32),

    #[error("arity {requested} is smaller than the term arity {needed}")]
    ArityTooSmall { requested: usize, needed: usize },

    #[error("invalid truth table: {0}")]
    InvalidTable(String),

    #[error("{value} is not in the minimal subalgebra of the tuple")]
    SelectorOutOfRange { value: u32 },

    #[error("not representable: {0}")]
    NotRepresentable(Counterexample),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
