//! Exact rational arithmetic and sparse polynomials over ℚ.
//!
//! Every polynomial in the crate is an [`MPoly`]: a map from exponent
//! vectors to nonzero rationals, iterated in graded reverse lexicographic
//! order. Univariate polynomials ([`UPoly`]) describe the character
//! polynomial of the exponential functor and its antiderivative.

mod monomial;
mod mpoly;
mod rational;
mod text;
mod upoly;

pub use monomial::ExpVec;
pub use mpoly::{ArithOp, MPoly};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use text::parse_mpoly;
pub use upoly::UPoly;
