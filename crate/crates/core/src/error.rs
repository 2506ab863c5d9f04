use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("length mismatch: permutation has {perm} letters, degree vector has {degs}")]
    Length { perm: usize, degs: usize },

    #[error("invalid permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("empty search grid")]
    EmptyGrid,

    #[error("search space of {size} candidates exceeds the cap of {cap}")]
    SearchTooLarge { size: u128, cap: u128 },

    #[error("operator is not an O-operator (nonzero Maurer-Cartan residual)")]
    NotOOperator,

    #[error("operator is not a verified homotopy O-operator up to weight {order}")]
    NotHomotopyOOperator { order: usize },

    #[error("degree violation: {0}")]
    Degree(String),

    #[error("truncation exceeded: requested order {requested}, bound {bound}")]
    Truncation { requested: usize, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown basis element {0:?}")]
    UnknownBasis(String),

    #[error("unresolved reference: {0}")]
    Unresolved(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
