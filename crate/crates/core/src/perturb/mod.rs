//! Strong deformation retracts, the perturbation lemma, and the small
//! models of the bar resolution and of the Hochschild complex of a free DGA.

mod bimodule;
mod cyclic;
mod duality;
mod sdr;

pub use bimodule::{
    difference_perturbation, homotopy, inclusion, linear_sdr, projection, small_bimod_differential,
    small_bimod_name, small_bimodule_resolution, splitting, KeyedSdr, SmallBimodKey,
};
pub use cyclic::{
    compare_rings, cyclic_homotopy, cyclic_inclusion, cyclic_projection, cyclic_splitting, small_cohomology_ring,
    small_cyclic_complex, small_cyclic_differential, small_name, transported_diagonal, RingComparison, SmallKey,
};
pub use duality::{cobar_duality_iso, small_complex, DualityIso};
pub use sdr::{keyed_map, perturb, FilteredPerturbation, SdrData, SDR_IDENTITIES};

use thiserror::Error;

use crate::bar::BarError;
use crate::dg::DgError;
use crate::graded::GradedError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PerturbError {
    #[error("the differential is not linear")]
    NotLinear,
    #[error("perturbation series does not terminate in degree {degree}")]
    SeriesDiverges { degree: i64 },
    #[error("identity {identity} fails in degree {degree}")]
    IdentityFails { identity: &'static str, degree: i64 },
    #[error("closed formula and perturbation series disagree: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Bar(#[from] BarError),
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}
