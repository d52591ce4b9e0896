use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar `{0}`")]
    BadScalar(String),
    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("malformed category: {0}")]
    MalformedCategory(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("presentation did not close within {bound} morphisms")]
    NonFinite { bound: usize },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("objects live in different categories or fields")]
    CategoryMismatch,
    #[error("not a functor: {0}")]
    NotFunctorial(String),
    #[error("not natural: {0}")]
    NotNatural(String),
    #[error("not a short exact sequence: {0}")]
    NotExact(String),
    #[error("legs do not form a cocone: {0}")]
    NotACocone(String),
    #[error("legs do not form a cone: {0}")]
    NotACone(String),
    #[error("first term of the sequence is not a constant diagram")]
    KernelNotConstant,
    #[error("index category is not discrete")]
    NotDiscrete,
    #[error("representation is not defined over a product category: {0}")]
    ShapeMismatch(String),
    #[error("random generation gave up after {attempts} attempts")]
    BudgetExhausted { attempts: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
