//! Finite-rank completeness: the kernel `K_N(x, x') = Σ_{n=l+1}^N R_n(x) R̄_n(x')`
//! acts as the identity on basis members with `n ≤ N` and annihilates the rest.
//!
//! Radial functions here are taken in the variable `x` itself,
//! `R_n(x) = e^{−x/2} 𝓛_n(x)`.

use dashu::rational::RBig;

use super::orthonormality::weighted_inner;
use crate::error::{Error, Result};
use crate::laguerre::{ltp_poly, reduced_radial, ExactPolynomial, LtpIndices};
use crate::numerics::{HighPrecReal, PrecisionContext};

fn constant(value: &crate::numerics::RadicalScaled) -> ExactPolynomial {
    ExactPolynomial::new(0, vec![RBig::ONE], value.clone())
}

/// Polynomial part of `∫ K_N(x, x') R_m(x') x'² dx' − R_m(x)`, computed with
/// exact projection coefficients. The residual function is `e^{−x/2}` times it.
pub fn projection_residual_poly(alpha: i32, l: u32, n_max: u32, m: u32) -> Result<ExactPolynomial> {
    if n_max < l + 1 || m < l + 1 {
        return Err(Error::InvalidIndices(format!(
            "need N >= l+1 and m >= l+1, got N={n_max}, m={m}, l={l}"
        )));
    }
    let target = LtpIndices::new(alpha, m, l)?;
    let mut projected = ExactPolynomial::zero();
    for n in l + 1..=n_max {
        let coefficient = weighted_inner(alpha, l, m, n)?.value;
        if coefficient.is_zero() {
            continue;
        }
        let term = ltp_poly(LtpIndices::new(alpha, n, l)?).mul(&constant(&coefficient));
        projected = projected.try_add(&term)?;
    }
    projected.try_sub(&ltp_poly(target))
}

/// Residuals of the truncated completeness kernel applied to `R^α_{ml}` at
/// each of `x_points`: exactly zero for `m ≤ N` and `−R^α_{ml}(x)` otherwise.
pub fn completeness_projection(
    alpha: i32,
    l: u32,
    n_max: u32,
    m: u32,
    x_points: &[HighPrecReal],
    ctx: &PrecisionContext,
) -> Result<Vec<HighPrecReal>> {
    let residual = projection_residual_poly(alpha, l, n_max, m)?;
    let wp = ctx.working();
    x_points
        .iter()
        .map(|x| {
            if residual.is_zero() {
                return Ok(ctx.zero());
            }
            Ok(reduced_radial(&residual, x, &wp)?.round_to(ctx))
        })
        .collect()
}
