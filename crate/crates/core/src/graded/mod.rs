//! Graded modules, truncated complexes, Koszul signs, tensor products,
//! suspension and duals.

mod complex;
mod keyed;
mod module;
mod sign;

pub use complex::{dual_complex, dual_map, homology_table, tensor_complex, torsion_i64, GradedMap, TruncatedComplex};
pub use keyed::{KeyedBasis, KeyedComplex};
pub use module::{suspend_name, GradedBasisModule, Grading};
pub use sign::{koszul_sign, parity_sign, permutation_sign};

use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("basis element {name:?} would sit in negative degree {degree}")]
    NegativeDegree { name: String, degree: i64 },
    #[error("duplicate basis element {name:?} in degree {degree}")]
    DuplicateName { name: String, degree: i64 },
    #[error("d∘d ≠ 0 starting in degree {degree} at ({row}, {col})")]
    NotNilpotent { degree: i64, row: usize, col: usize },
    #[error("map does not commute with differentials in degree {degree} at ({row}, {col})")]
    NotChainMap { degree: i64, row: usize, col: usize },
    #[error("block in degree {degree} has shape {found:?}, expected {expected:?}")]
    ShapeMismatch { degree: i64, expected: (usize, usize), found: (usize, usize) },
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("grading conventions differ")]
    GradingMismatch,
    #[error("degree {degree} needs chains beyond the truncation {valid_through}")]
    BeyondTruncation { degree: i64, valid_through: i64 },
    #[error("term outside the basis of degree {degree}")]
    UnknownKey { degree: i64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
