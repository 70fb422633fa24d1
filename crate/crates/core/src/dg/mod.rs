//! Free and tabulated DG algebras, DG coalgebras, Hopf structures, shuffle
//! and step-path products, and the cobar construction.

mod algebra;
mod free;
mod hopf;
mod random;
mod tabulated;
mod word;

pub use algebra::{AugmentedDga, TensorAlgebra};
pub use free::{extend_derivation, FreeDga, Generator};
pub use hopf::{adjunction_map, cobar, cofree_lift, shuffle_diagonal, tensorization_of_coalgebra, HopfData};
pub use random::random_free_dga;
pub use tabulated::{
    divided_powers_algebra, tensor_product, truncated_polynomial, TabulatedCoalgebra, TabulatedDga,
    TabulatedDgaBuilder,
};
pub use word::{delannoy, shuffle_product, step_path_product, Word};

use thiserror::Error;

use crate::graded::GradedError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DgError {
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("connectivity hypothesis fails: {0}")]
    ConnectivityViolation(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("{what} should have degree {expected}, found {found}")]
    DegreeMismatch { what: String, expected: i64, found: i64 },
    #[error("d∘d ≠ 0 on {0}")]
    NotSquareZero(String),
    #[error("product is not associative on {0}")]
    NotAssociative(String),
    #[error("Leibniz rule fails on {0}")]
    LeibnizFails(String),
    #[error("product is not graded commutative on {0}")]
    NotCommutative(String),
    #[error("diagonal is not coassociative on {0}")]
    NotCoassociative(String),
    #[error("diagonal is not strictly counitary on {0}")]
    NotCounitary(String),
    #[error("{0} does not commute with differentials")]
    NotChainMap(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
}
