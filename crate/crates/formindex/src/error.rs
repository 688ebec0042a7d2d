//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error in a germ file, with 1-based position.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// A germ file parsed but describes inconsistent objects.
    #[error("semantic error: {0}")]
    Semantic(String),

    /// Evaluation of a rational function at a root of its denominator.
    #[error("pole at evaluation point")]
    Pole,

    /// The operation requires an isolated-singularity form but the relevant
    /// quotient is infinite-dimensional.
    #[error("form does not have an isolated singularity on this germ")]
    NonIsolated,

    /// The germ was not declared an isolated complete intersection.
    #[error("germ is not declared an isolated complete intersection")]
    NotIcis,

    /// A branch pullback vanishes to working precision; the caller may retry
    /// with a higher precision.
    #[error("series order undetermined at precision {precision}")]
    Undetermined { precision: usize },

    /// A truncated computation did not reach two consecutive agreeing bounds.
    #[error("dimension did not stabilize up to bound {bound}")]
    NotStabilized { bound: usize },

    /// Standard-basis computation exceeded its pair-queue cap.
    #[error("resource limit exceeded ({0} pairs); input is beyond desk scale")]
    ResourceLimit(usize),

    /// An operation that requires a completed standard basis received a raw
    /// generating set.
    #[error("submodule presentation is not a completed standard basis")]
    NotABasis,

    /// Standard-monomial enumeration exceeded the requested cap.
    #[error("standard monomial count exceeds cap {0}")]
    CapExceeded(usize),

    /// A graded computation found a generator that is not homogeneous.
    #[error("relation {index} is not homogeneous for the given weights")]
    NonHomogeneous { index: usize },

    /// Alternating sum of Poincaré series failed to be a polynomial.
    #[error("alternating sum of Poincaré series is not a polynomial")]
    NonPolynomialEuler,

    /// Exterior degree or similar argument out of range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// A precondition of an index computation is violated.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Repeated generic draws disagreed; the seed produced degenerate forms.
    #[error("genericity failure: {0}")]
    Genericity(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
