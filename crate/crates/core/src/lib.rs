//! Solitons, false-vacuum structure, Gaussian wave functionals, and
//! tunneling matrix elements for a scalar field on a 1D lattice.
//!
//! The crate builds kink/antikink configurations and soliton pairs,
//! verifies the topological lower bound on their mass, converts a
//! false/true vacuum energy gap into pair separations and Gaussian
//! widths, and evaluates tunneling matrix elements both for rectangular
//! quantum-mechanical barriers and between wave functionals of the
//! field. Natural units throughout: hbar = c = 1.

pub mod error;
pub mod lattice;
pub mod potentials;
pub mod quadrature;
pub mod solitons;
pub mod tunneling;
pub mod wavefunctionals;

pub use error::{Error, Result};
pub use lattice::{FieldConfig, Grid};
pub use potentials::{ExpansionCoeffs, Potential, VacuumReport};
