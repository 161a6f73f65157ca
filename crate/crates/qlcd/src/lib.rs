//! Exact GF(4) linear algebra and a verification workbench for quaternary
//! Hermitian LCD codes.
//!
//! The crate has four layers:
//!
//! - [`gf4`] / [`matrix`]: the field `{0, 1, ω, ϖ}` and dense exact linear
//!   algebra over it (reduced echelon form, rank, null spaces, conjugate
//!   transpose).
//! - [`code`]: linear `[n,k]` codes held by a canonical generator matrix,
//!   Hermitian duality, LCD and self-orthogonality tests, and the usual
//!   transformations (puncture, shorten, extend, row subcodes, simplex
//!   family).
//! - [`weights`]: exact weight enumerators by incremental exhaustive
//!   enumeration or via the dual and the MacWilliams transform, minimum
//!   distance, entanglement-assisted quantum code parameters, and
//!   optimality classification against bundled distance tables.
//! - [`corpus`]: the bundled data set of generator matrices, construction
//!   recipes and distance bounds, plus the harness that recomputes every
//!   claim and reports matches and discrepancies.
//!
//! The `qlcd` binary exposes all of it on the command line; codes travel
//! between commands as `qmat` text so invocations compose in a pipeline.

#![forbid(unsafe_code)]

pub mod code;
pub mod corpus;
pub mod gf4;
pub mod matrix;
pub mod weights;

pub use code::{CoordSet, LinearCode};
pub use gf4::Gf4;
pub use matrix::Gf4Matrix;
pub use weights::WeightEnumerator;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix has no nonzero rows")]
    ZeroMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("coordinate {coord} out of range 1..={n}")]
    CoordOutOfRange { coord: usize, n: usize },
    #[error("duplicate coordinate {0}")]
    DuplicateCoord(usize),
    #[error("coordinate set must leave at least one coordinate")]
    EmptyAfterPuncture,
    #[error("shortening leaves the zero code")]
    ShortenedToZero,
    #[error("the full space [n,n] has a zero Hermitian dual")]
    DualOfFullSpace,
    #[error("row selection {0} out of range or empty")]
    BadRowSelection(String),
    #[error("simplex dimension must be at least 2 (got {0})")]
    SimplexTooSmall(u32),
    #[error("simplex length (4^{k}-1)/3 exceeds the limit of {limit}")]
    SimplexTooLong { k: u32, limit: usize },
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("exhaustive limit exceeded: k={k}, n-k={nk}, limit={limit}")]
    LimitExceeded { k: usize, nk: usize, limit: usize },
    #[error("MacWilliams transform produced a non-integral or negative coefficient at degree {0}")]
    InvalidTransform(usize),
    #[error("no bounds entry for [{n},{k}]")]
    MissingBoundsEntry { n: usize, k: usize },
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("recipe {0}: {1}")]
    Recipe(String, String),
    #[error("recipe cycle involving {0}")]
    RecipeCycle(String),
    #[error("matrix file {0} referenced but not bundled")]
    MissingMatrix(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
