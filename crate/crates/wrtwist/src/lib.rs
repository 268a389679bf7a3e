//! Exact arithmetic for well-rounded twists of ideal lattices.
//!
//! An ideal I of the ring of integers of an imaginary quadratic field
//! Q(sqrt(-D)) embeds as a planar lattice. Stretching that lattice by
//! diag(alpha, 1/alpha) for suitable alpha > 0 produces twists whose two
//! successive minima agree. This crate enumerates, in exact rational
//! arithmetic, every basis of I that realizes such a well-rounded twist,
//! groups the results up to similarity, and cross-checks the enumeration
//! against an independent brute-force oracle.
//!
//! Pipeline: [`ideal::Ideal::canonical_basis`] reduces generators to the
//! canonical triple (t, y, g), [`enumerate::all_good_tuples`] lists the
//! integer coordinate tuples of twistable bases, [`similarity::classify`]
//! buckets them by the exact similarity invariant |cos theta|, and
//! [`oracle`] re-derives the tuple set without the interval machinery.

pub mod criteria;
pub mod enumerate;
pub mod field;
pub mod ideal;
pub mod oracle;
mod par;
pub mod rat;
pub mod report;
pub mod similarity;
pub mod surd;
#[cfg(test)]
pub(crate) mod testutil;

use num_bigint::BigInt;

/// Why a basis pair admits no equal-norm twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotTwistableReason {
    /// re(u)^2 = re(v)^2, the twist parameter has a zero denominator.
    ZeroDenominator,
    /// The twist parameter is not positive, no real stretch exists.
    NonPositive,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("d must be positive, got {0}")]
    NonPositiveD(i64),
    #[error("d must be squarefree, {0} is divisible by {1}^2")]
    NotSquarefree(i64, i64),
    #[error("ideal generators span the zero ideal")]
    ZeroIdeal,
    #[error("not a canonical ideal basis: {0}")]
    InvalidTriple(String),
    #[error("degenerate basis: vectors are linearly dependent over R")]
    DegenerateBasis,
    #[error("basis admits no well-rounded twist ({0:?})")]
    NotTwistable(NotTwistableReason),
    #[error("oracle bound {given} is below the safe bound {required}")]
    InsufficientBound { given: BigInt, required: BigInt },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use criteria::BasisPair;
pub use enumerate::{all_good_tuples, extendable_pairs, Branch, ExtendablePair, GoodTuple};
pub use field::{FieldCase, QuadElem, QuadField};
pub use ideal::Ideal;
pub use rat::Rat;
pub use similarity::{classify, ClassLabel, TwistClass};
pub use surd::Surd;
