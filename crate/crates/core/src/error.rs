use thiserror::Error;

use crate::poly::MPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    /// Exact division left a nonzero remainder.
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: Box<MPoly> },

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    /// The quotient ring is not finite-dimensional; `witness` is a variable
    /// index with no pure power among the leading monomials.
    #[error("quotient is infinite-dimensional (no pure power of variable {witness} is a leading monomial)")]
    InfiniteDimensional { witness: usize },

    #[error("mismatched functors in localized arithmetic")]
    FunctorMismatch,

    #[error("invalid functor specification: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An identity that holds by construction failed; indicates a bug.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
