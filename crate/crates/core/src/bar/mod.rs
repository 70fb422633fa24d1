//! Cyclic bar complex, two-sided bar resolution, reduced bar construction,
//! the Alexander–Whitney diagonal and the resulting Hochschild ring tables.

mod aw;
mod complexes;
mod ring;

pub use aw::{
    alexander_whitney, alexander_whitney_map, apply_diagonal, cyclic_diagonal, cyclic_diagonal_map,
    AlexanderWhitneyMap, CyclicDiagonal, TensorIndex,
};
pub use complexes::{
    bar_resolution, bimodule_differential, cyc_name, cyclic_bar, cyclic_differential, cyclic_dimensions,
    deconcatenate, reduced_bar, reduced_differential, spine_name, suspended_degree, BarBasis, BimodKey, CycKey,
};
pub(crate) use ring::apply_sparse;
pub use ring::{
    cdga_chain_product, cup_product_table, hh_cdga_ring, hh_cdga_ring_shifted, hochschild_cohomology_ring,
    hochschild_cohomology_ring_shifted, keyed_ring_table, ClassBases, DiagonalTerms, HochschildClassTable,
};

use thiserror::Error;

use crate::dg::DgError;
use crate::graded::GradedError;
use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BarError {
    #[error("connectivity hypothesis fails: {0}")]
    ConnectivityViolation(String),
    #[error("algebra is not graded commutative: {0}")]
    NotCommutative(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("product of cycles in degrees {p} and {q} is not a cycle")]
    ProductNotCycle { p: i64, q: i64 },
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
