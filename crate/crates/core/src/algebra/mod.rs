//! Exact arithmetic foundation: binary finite fields `GF(2^m)`, univariate
//! polynomials and rational functions over them, places of the rational
//! function field `F_q(t)`, and the input expression grammar.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function, so values may be shared freely across threads.

mod field;
mod parse;
mod place;
mod poly;
mod ratfunc;

pub use field::{BinaryField, FieldElement, FieldEmbedding, MAX_FIELD_DEGREE};
pub use parse::{parse_ratfunc, ParseError};
pub use place::{places_up_to_degree, poles_of, Place, ResidueMap};
pub use poly::Poly;
pub use ratfunc::RatFunc;

/// Errors from constructing or combining algebra-layer values.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("GF(2^{m}) is unsupported: extension degree must be between 1 and 16")]
    UnsupportedDegree { m: usize },
    #[error("field order {q} is not a power of two")]
    NotAPowerOfTwo { q: u64 },
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("operation undefined on zero input")]
    ZeroInput,
}
