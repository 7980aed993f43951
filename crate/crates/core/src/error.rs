use thiserror::Error;

use crate::generator::Generator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("filtration degree of the zero element is undefined")]
    UndefinedDegree,
}

/// Syntax error with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("element is not a maximal vector: [e, u] = {commutator}")]
    NotMaximal { commutator: String },
    #[error("element is not in U(sl2): offending terms {terms}")]
    NotInLiePart { terms: String },
    #[error("element is not weight-homogeneous (weights {weights:?})")]
    NotHomogeneous { weights: Vec<i64> },
    #[error("weight {weight} is not a nonnegative even integer")]
    BadWeight { weight: i64 },
    #[error("element has the wrong shape for [z1, x] + z2 x: {terms}")]
    Shape { terms: String },
    #[error("fatal: no solution in the expected basis ({context}); this contradicts the maximal-vector classification")]
    Unsolvable { context: String },
    #[error("weight-1 maximal basis check requires z = 0, got z = {z}")]
    NonzeroParameter { z: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error("element does not commute with {generator}: commutator {commutator}")]
    NotInvariant { generator: Generator, commutator: String },
    #[error("fatal: leading-term decomposition failed ({context}); unreachable for sl2-invariant input")]
    DecompositionFailure { context: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("basis of total degree <= {max_degree} has {size} monomials, exceeding the limit {limit}")]
    BasisTooLarge { max_degree: u32, size: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("the Euler family is only a derivation for z = 0; relation [x, y] = z has defect {defect}")]
    EulerObstruction { defect: String },
}
