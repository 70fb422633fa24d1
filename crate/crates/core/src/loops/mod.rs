//! Free loop space cohomology: cyclic words, trivial extensions for
//! suspensions, and the explicit models of spheres and projective spaces.

mod comparison;
mod models;
mod suspension;
mod words;

pub use words::{
    cyclic_action, hh_trivial_algebra, invariants_and_coinvariants, invariants_by_matrix, necklace_count, sym, CyclicWordSpace, Orbit,
};
pub use comparison::{primitive_coordinates, suspension_isomorphism, SuspensionIsomorphism};
pub use models::{
    algebra_complex, cdga_cohomology_ring, cpn_loop_module, cpn_loop_ring, projective_model, sphere_loop_module,
    sphere_loop_ring, sphere_model, table_shape, GroupShape,
};
pub use suspension::{suspension_algebra, suspension_loop_ring, TrivialExtensionRing};

use thiserror::Error;

use crate::bar::BarError;
use crate::dg::DgError;
use crate::graded::GradedError;
use crate::perturb::PerturbError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LoopError {
    #[error("input is not the cohomology of a space with free homology: {0}")]
    NotFreeHomology(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Bar(#[from] BarError),
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Perturb(#[from] PerturbError),
}
