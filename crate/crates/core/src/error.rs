use thiserror::Error;

use crate::eisenstein::{Pair, Triple};

/// Failure cases shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: i128 },
    #[error("{0} does not satisfy a^2 = b^2 + c^2 - bc")]
    NotEisenstein(Triple),
    #[error("{0} is Eisenstein but gcd(a, b, c) != 1")]
    NotPrimitive(Triple),
    #[error("{0} violates the ordering b > c")]
    Unordered(Triple),
    #[error("(1,1,1) is the equilateral special case and has no pair or forest address")]
    Equilateral,
    #[error("the twin of (1,1,1) has a zero side")]
    DegenerateTwin,
    #[error("{0} is not a forest pair (need 0 < n < m, gcd(n, m) = 1, m - n not divisible by 3)")]
    InvalidPair(Pair),
    #[error("{0} is not a tree-form node of the forest")]
    NotForestTriple(Triple),
    #[error("invalid path {input:?}: {reason}")]
    BadPath { input: String, reason: &'static str },
    #[error("triple {0} emitted more than once")]
    DuplicateTriple(Triple),
    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
