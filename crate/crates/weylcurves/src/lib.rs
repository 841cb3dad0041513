//! Exact-arithmetic intersection theory on blow-ups of projective r-space at s
//! general points.
//!
//! The crate works with numerical classes of curves and divisors on Y^r_s, the
//! blow-up of P^r at s general points:
//!
//! * curve classes  c = (d; m_1..m_s)  meaning  d*h - sum m_i e_i  in A^{r-1},
//! * divisor classes D = (d; m_1..m_s) meaning  d*H - sum m_i E_i  in A^1.
//!
//! Everything is integer-exact (`BigInt`); no floating point enters any
//! mathematical path. On top of the pairings ([`chowcore`]) sit the Cremona
//! action ([`cremona`]), Weyl-orbit enumeration ([`weylorbits`]),
//! (-1)/(0)/(1) classification ([`classify`]), effective-cone facets
//! ([`cones`]), dimension counts ([`dimension`]) and a CLI ([`cli`]).

pub mod chowcore;
pub mod classify;
pub mod cli;
pub mod cones;
pub mod cremona;
pub mod dimension;
pub mod weylorbits;

/// Crate-wide error type.
///
/// The CLI maps `Parse`/`EmptyInput` to exit code 2 (argument errors) and the
/// remaining variants to exit code 3 (domain errors).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two classes (or a class and an index set) live on different spaces.
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    /// An index set is the wrong size, has repeats, or points outside 1..=s.
    #[error("invalid index set: {0}")]
    BadIndices(String),
    /// The operation is not defined for this space or parameter range.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A documented precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Unparseable input (malformed JSON, bad integer strings, wrong shapes).
    #[error("parse error: {0}")]
    Parse(String),
    /// An operation that needs at least one element got an empty list.
    #[error("empty input: {0}")]
    EmptyInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
