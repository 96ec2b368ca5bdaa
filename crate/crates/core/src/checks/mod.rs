//! Exact and numerical checks of the analytic properties of the Laguerre-type
//! polynomials: biorthonormality, finite-rank completeness, the differential
//! equations and the potential decomposition.

mod completeness;
mod ode;
mod orthonormality;
mod potentials;

pub use completeness::{completeness_projection, projection_residual_poly};
pub use ode::{
    convention_bridge_residual, derivative_shift_check, glp_ode_residual_poly, ltp_ode_residual_poly, ode_residual_glp,
    ode_residual_ltp,
};
pub use orthonormality::{
    orthonormality_matrix, weighted_inner, weighted_inner_first, weighted_inner_standard, InnerProductResult,
};
pub use potentials::{potentials, PotentialDecomposition};
