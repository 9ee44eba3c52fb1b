//! Exact computational Lie theory for the split classical families.
//!
//! Everything here works over arbitrary-precision rationals; there is no
//! floating point anywhere and no identity is checked approximately. The
//! crate builds the split matrix realizations of the classical simple Lie
//! algebras (`algebra`), derives the |k|-gradings induced by subsets of
//! simple roots together with their Killing-form dualities (`grading`),
//! and decides coisotropy and parabolicity for root subalgebras
//! (`coisotropy`).
//!
//! All types are immutable after construction and every operation is a
//! pure function, so values can be shared freely across threads.

pub mod algebra;
pub mod coisotropy;
pub mod grading;
pub mod linalg;
pub mod report;

pub use algebra::{build_algebra, AlgebraElement, Family, LieAlgebra, RootDatum};
pub use grading::{grade, GradedDecomposition};
pub use linalg::{rat, ratio, Mat, Rat};

use thiserror::Error;

/// Errors surfaced by construction and query operations.
///
/// Verification routines do not use this type: a failed mathematical check
/// is report content, not an error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported algebra: family {family} requires rank >= {min_rank}, got {rank}")]
    UnsupportedAlgebra {
        family: algebra::Family,
        rank: usize,
        min_rank: usize,
    },
    #[error("dimension mismatch in {context}: expected {expected}, got {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("sigma must be a nonempty subset of 1..={rank}")]
    EmptySigma { rank: usize },
    #[error("sigma index {index} out of range 1..={rank}")]
    SigmaOutOfRange { index: usize, rank: usize },
    #[error("root subset is not closed under addition; not a subalgebra")]
    NotASubalgebra,
    #[error("sweep refused: {roots} roots would require 2^{roots} subsets, cap is |roots| <= {cap}")]
    SweepCapExceeded { roots: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
