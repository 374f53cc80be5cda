//! Completions `k_v` of `F_q(t)` modeled as truncated Laurent series over the
//! residue field, with exact-within-precision square roots, an Artin–Schreier
//! equation solver, and the split/inert/ramified classifier for quadratic
//! extensions `w² + w = f` at a place.
//!
//! Series carry an *absolute* precision `N` (the value is known modulo
//! `π^N`). Refuting verdicts derived from coefficients below the precision
//! (odd valuation, an odd-index obstruction to being a square, a residue of
//! trace 1) are exact; affirmative answers are correct modulo `π^N` and the
//! callers say so.

mod classify;
mod series;

pub use classify::{classify_at_place, LocalSplitting, PlaceClass};
pub use series::{LaurentSeries, LocalField, DEFAULT_PRECISION, MAX_PRECISION};

/// Failure modes of local-field computations.
///
/// `NotASquare` and `Unsolvable` are *certain* refutations read off from
/// coefficients within the known precision; `InsufficientPrecision` is the
/// only escalation signal and is never folded into a verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
pub enum LocalError {
    #[error("not a square: odd-index coefficient at π^{obstruction_index} is nonzero")]
    NotASquare { obstruction_index: i64 },
    #[error("insufficient precision to decide")]
    InsufficientPrecision,
    #[error("series is not integral: Artin–Schreier reduction required first")]
    NotIntegral,
    #[error("no solution in the completion: residue has absolute trace 1")]
    Unsolvable,
}
