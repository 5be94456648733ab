//! Exact sparse linear algebra over `Z`, `Q` and prime fields.
//!
//! This is the decision layer of the crate: Smith normal form provides
//! torsion invariants of integer homology, kernels provide cycle spaces,
//! and `solve_for_primitive` decides image membership, which is how every
//! "these cycles are homologous" claim elsewhere in the crate is certified.

mod homology;
mod matrix;
mod scalar;
mod snf;
mod solve;

pub use homology::{homology, HomologySummary};
pub use matrix::SparseMatrix;
pub use scalar::{Ring, Scalar};
pub use snf::{smith_normal_form, SnfDecomposition};
pub use solve::{kernel_basis, rank, solve, solve_for_primitive};

use thiserror::Error;

/// Errors raised by linear-algebra entry points.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: expected {expected:?}, got {got:?}")]
    RingMismatch { expected: Ring, got: Ring },
    #[error("operation requires ring {0:?}")]
    WrongRing(Ring),
    #[error("complex does not compose: d_out * d_in != 0")]
    NotAComplex,
}
