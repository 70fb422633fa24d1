//! Exact computation of Hochschild homology and cohomology rings of
//! differential graded algebras, with the bar, cyclic bar and cobar
//! constructions, perturbation-lemma small models and free loop space
//! cohomology of suspensions, spheres and complex projective spaces.

pub mod bar;
pub mod dg;
pub mod graded;
pub mod linalg;
pub mod lincomb;
pub mod loops;
pub mod perturb;
