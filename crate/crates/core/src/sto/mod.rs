//! Radial nuclear-attraction integrals of Slater-type orbitals with the
//! Coulomb–Yukawa kernel `r^{μ*−1} e^{−ξr}`:
//!
//! ```text
//! I = ∫₀^∞ R_{n*}(ζ, r) R_{n'*}(ζ', r) r^{μ*−1} e^{−ξr} r² dr
//! ```
//!
//! evaluated in closed form, by quadrature, and as truncated Laguerre series.

mod convergence;
mod integral;
mod params;

pub use convergence::{convergence_table, ConvergenceRow, Method};
pub use integral::{analytic_i, j_moment, norm_factor, quadrature_i, series_i, Form};
pub use params::{sto_radial, IntegralSpec, StoParams, StoRadial};
