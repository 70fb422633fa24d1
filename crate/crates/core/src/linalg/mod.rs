//! Exact linear algebra over Z, Q and prime fields.

mod homology;
mod matrix;
mod ring;
mod snf;
mod sparse;

pub use homology::{
    homology_basis, homology_ranks, homology_slice, normalize_chain, HomologyBasis, HomologySummary,
};
pub use matrix::{determinant, identity, is_zero_matrix, matmul, matvec, zeros, ExactMatrix};
pub use ring::{
    bigint_to_i64, CoefficientRing, Euclidean, Integers, Prime, PrimeField, Rationals,
};
pub use sparse::{sparse_invariant_factors, SparseMatrix};
pub use snf::{invariant_factors, rank, smith, smith_normal_form, Smith};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown coefficient ring {0:?}")]
    UnknownRing(String),
    #[error("d_out * d_in is nonzero at ({row}, {col})")]
    CompositionNotZero { row: usize, col: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}
