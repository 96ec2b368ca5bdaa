//! Exact construction and evaluation of the L^α Laguerre-type polynomials,
//! the generalized Laguerre polynomials and the associated radial functions.

mod glp;
mod indices;
mod ltp;
mod poly;
mod radial;

pub use glp::{beta_coeff, binom_f, glp_nonstandard, glp_standard};
pub use indices::{GlpIndices, LtpIndices};
pub use ltp::{
    ltp_poly, ltp_standard_convention, ltp_standard_weighted, ltp_via_glp, ltp_weighted_poly, norm_sq, pi_coeff,
    pi_rational,
};
pub use poly::{eval_poly, ExactPolynomial};
pub(crate) use radial::reduced_radial;
pub use radial::{radial_r, radial_r_weighted, RadialScale};
