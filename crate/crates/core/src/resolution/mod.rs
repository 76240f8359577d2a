//! Graded Betti numbers and regularity of monomial ideals.
//!
//! The main engine walks the lcm lattice and takes reduced homology of the
//! upper Koszul complex at each element. [`taylor_betti_oracle`] is an
//! independent check for ideals with few generators.

mod betti;
mod complex;
mod lattice;
mod linalg;
mod linear;
mod taylor;

pub use betti::{betti_table, betti_table_with, BettiJson, BettiOptions, BettiTable, DEFAULT_LATTICE_CAP};
pub use complex::SimplicialComplex;
pub use lattice::LcmLattice;
pub use linalg::{rank, Field};
pub use linear::{
    component_ideal, has_linear_resolution, has_linear_resolution_with, is_componentwise_linear,
    regularity, regularity_with,
};
pub use taylor::{taylor_betti_oracle, TAYLOR_MAX_GENERATORS};
