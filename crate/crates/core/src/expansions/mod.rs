//! Laguerre-series expansions of `r^{η*} e^{−ξr}` in the L^α Laguerre-type and
//! generalized Laguerre bases, in arranged (basis order) and rearranged
//! (collected by power of `r`) form.

mod ladder;
mod series;

use dashu::rational::RBig;

pub(crate) use ladder::rational_power;
pub use series::{Basis, Expansion, ExpansionCoeffTable, RearrangedCoeffTable};

use crate::error::{Error, Result};
use crate::numerics::{pow_rational, HighPrecReal, PrecisionContext};

/// `μ* − 1 = n + η*` with integer `n ≥ 0` and `η* ∈ [0, 1)`, plus screening `ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerFunctionSpec {
    pub mu_star: RBig,
    pub n_int: u32,
    pub eta_star: RBig,
    pub xi: RBig,
}

/// Splits `μ*` into integer and fractional parts of `μ* − 1`, with `ξ = 0`.
pub fn split_mu_star(mu_star: &RBig) -> Result<PowerFunctionSpec> {
    if *mu_star < RBig::ONE {
        return Err(Error::InvalidParameter(format!("mu* = {mu_star} is below 1")));
    }
    let shifted = mu_star - RBig::ONE;
    let n_int = shifted.floor();
    let eta_star = &shifted - RBig::from(n_int.clone());
    Ok(PowerFunctionSpec {
        mu_star: mu_star.clone(),
        n_int: u32::try_from(n_int).map_err(|_| Error::InvalidParameter(format!("mu* = {mu_star} too large")))?,
        eta_star,
        xi: RBig::ZERO,
    })
}

impl PowerFunctionSpec {
    pub fn with_xi(mut self, xi: RBig) -> Result<Self> {
        if xi < RBig::ZERO {
            return Err(Error::InvalidParameter(format!("xi = {xi} is negative")));
        }
        self.xi = xi;
        Ok(self)
    }
}

/// `f(r) = r^{μ*−1} e^{−ξr}`.
pub fn target_function(spec: &PowerFunctionSpec, r: &HighPrecReal, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    if r.is_negative() {
        return Err(Error::InvalidParameter(format!("r must be nonnegative, got {r}")));
    }
    let power = &spec.mu_star - RBig::ONE;
    if r.is_zero() {
        return Ok(if power == RBig::ZERO { ctx.one() } else { ctx.zero() });
    }
    let wp = ctx.working();
    let log = wp.rational(&power) * r.ln() - wp.rational(&spec.xi) * r;
    Ok(log.exp().round_to(ctx))
}

fn ltp(alpha: i32, nu: u32) -> Basis {
    Basis::Ltp { alpha, nu }
}

fn point_moments(r: &HighPrecReal, count: u32) -> Vec<RBig> {
    let r = r.to_rational();
    (0..count).map(|s| pow_rational(&r, s as i64)).collect()
}

fn evaluate_sum(expansion: &Expansion, scaled: &RBig, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    let wp = ctx.working();
    Ok((expansion.leading_factor(&wp)? * wp.rational(scaled)).round_to(ctx))
}

fn partial_sum(
    basis: Basis,
    eta_star: &RBig,
    xi: &RBig,
    n: u32,
    r: &HighPrecReal,
    rearranged: bool,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    if r.is_negative() {
        return Err(Error::InvalidParameter(format!("r must be nonnegative, got {r}")));
    }
    let expansion = Expansion::up_to(basis, eta_star, xi, n)?;
    let moments = point_moments(r, basis.max_power(n) + 1);
    let sums = if rearranged {
        expansion.rearranged_partial_sums(n, &moments)?
    } else {
        expansion.arranged_partial_sums(n, &moments)?
    };
    let (_, last) = sums.last().expect("n is at least the first index");
    evaluate_sum(&expansion, last, ctx)
}

/// `A^{αν}_{η*μ}(ξ)`.
pub fn a_coeff(
    alpha: i32,
    nu: u32,
    mu: u32,
    eta_star: &RBig,
    xi: &RBig,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    Expansion::up_to(ltp(alpha, nu), eta_star, xi, mu)?.coefficient(mu, ctx)
}

/// `B^ν_{η*μ}(ξ)`.
pub fn b_coeff(nu: u32, mu: u32, eta_star: &RBig, xi: &RBig, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    Expansion::up_to(Basis::Glp { nu }, eta_star, xi, mu)?.coefficient(mu, ctx)
}

/// `Q^{αν}_{η*μ}(N, ξ) = Σ_{s=ν+1}^N A_s Π_{sμ}`.
pub fn q_coeff(
    alpha: i32,
    nu: u32,
    mu: u32,
    eta_star: &RBig,
    xi: &RBig,
    n: u32,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    if mu < nu || mu + 1 > n {
        return Err(Error::InvalidIndices(format!(
            "need nu <= mu <= N-1, got nu={nu}, mu={mu}, N={n}"
        )));
    }
    Expansion::up_to(ltp(alpha, nu), eta_star, xi, n)?.collected(mu, n, ctx)
}

/// `D^ν_{η*μ}(N, ξ) = Σ_{s=ν}^N B_s β_{sμ}`.
pub fn d_coeff(nu: u32, mu: u32, eta_star: &RBig, xi: &RBig, n: u32, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    if n < nu || mu > n - nu {
        return Err(Error::InvalidIndices(format!(
            "need 0 <= mu <= N-nu, got nu={nu}, mu={mu}, N={n}"
        )));
    }
    Expansion::up_to(Basis::Glp { nu }, eta_star, xi, n)?.collected(mu, n, ctx)
}

/// Order-`N` partial sum `Σ_{μ=ν+1}^N A_μ Σ_s Π_{μs} r^s`.
pub fn arranged_sum_ltp(
    alpha: i32,
    nu: u32,
    eta_star: &RBig,
    xi: &RBig,
    n: u32,
    r: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    partial_sum(ltp(alpha, nu), eta_star, xi, n, r, false, ctx)
}

/// Order-`N` partial sum `Σ_{μ=ν}^{N−1} Q_μ(N) r^μ`.
pub fn rearranged_sum_ltp(
    alpha: i32,
    nu: u32,
    eta_star: &RBig,
    xi: &RBig,
    n: u32,
    r: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    partial_sum(ltp(alpha, nu), eta_star, xi, n, r, true, ctx)
}

/// Order-`N` partial sum `Σ_{μ=ν}^N B_μ Σ_s β_{μs} r^s`.
pub fn arranged_sum_glp(
    nu: u32,
    eta_star: &RBig,
    xi: &RBig,
    n: u32,
    r: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    partial_sum(Basis::Glp { nu }, eta_star, xi, n, r, false, ctx)
}

/// Order-`N` partial sum `Σ_{μ=0}^{N−ν} D_μ(N) r^μ`.
pub fn rearranged_sum_glp(
    nu: u32,
    eta_star: &RBig,
    xi: &RBig,
    n: u32,
    r: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    partial_sum(Basis::Glp { nu }, eta_star, xi, n, r, true, ctx)
}
