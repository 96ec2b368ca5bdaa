use dashu::rational::RBig;

use super::params::{IntegralSpec, StoParams, StoRadial};
use crate::error::{Error, Result};
use crate::expansions::{rational_power, Basis, Expansion};
use crate::numerics::quadrature::integrate_half_line;
use crate::numerics::{gamma_rational, pow_rational, HighPrecReal, PrecisionContext};

/// Summation order of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    /// Basis order: `Σ_μ A_μ Σ_s Π_{μs} J^{n+s}`.
    Arranged,
    /// Collected by power: `Σ_μ Q_μ(N) J^{n+μ}`.
    Rearranged,
}

fn n_total_and_eps(bra: &StoParams, ket: &StoParams) -> (RBig, RBig) {
    (bra.n_star() + ket.n_star() - RBig::ONE, bra.zeta() + ket.zeta())
}

fn log_norm_pair(bra: &StoParams, ket: &StoParams, wp: &PrecisionContext) -> Result<HighPrecReal> {
    Ok(bra.log_normalization(wp)? + ket.log_normalization(wp)?)
}

/// `(2ζ)^{n*+1/2} (2ζ')^{n'*+1/2} / √[Γ(2n*+1) Γ(2n'*+1)]`.
pub fn norm_factor(spec: &IntegralSpec, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    let wp = ctx.working();
    Ok(log_norm_pair(&spec.bra, &spec.ket, &wp)?.exp().round_to(ctx))
}

/// `N Γ(a) / b^a` at working precision.
fn scaled_gamma(bra: &StoParams, ket: &StoParams, a: &RBig, b: &RBig, wp: &PrecisionContext) -> Result<HighPrecReal> {
    if *a <= RBig::ZERO {
        return Err(Error::InvalidParameter(format!("gamma argument {a} must be positive")));
    }
    let norm = log_norm_pair(bra, ket, wp)?.exp();
    Ok(norm * gamma_rational(a, wp)? / rational_power(b, a, wp))
}

/// Closed form `N Γ(N*+μ*+1) / (ζ+ζ'+ξ)^{N*+μ*+1}`.
pub fn analytic_i(spec: &IntegralSpec, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    let wp = ctx.working();
    let a = spec.n_total() + spec.mu_star() + RBig::ONE;
    let b = spec.eps_sum() + spec.xi();
    Ok(scaled_gamma(&spec.bra, &spec.ket, &a, &b, &wp)?.round_to(ctx))
}

/// `J^κ = N Γ(N*+κ+2) / (ζ+ζ')^{N*+κ+2}`.
pub fn j_moment(bra: &StoParams, ket: &StoParams, kappa: &RBig, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    let wp = ctx.working();
    let (n_total, eps) = n_total_and_eps(bra, ket);
    let a = n_total + kappa + RBig::from(2);
    Ok(scaled_gamma(bra, ket, &a, &eps, &wp)?.round_to(ctx))
}

/// The defining integral evaluated by double-exponential quadrature, with the
/// two orbitals and the kernel evaluated pointwise. Independent of the closed form.
pub fn quadrature_i(spec: &IntegralSpec, tol_bits: usize, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    let bra = StoRadial::new(&spec.bra, ctx)?;
    let ket = StoRadial::new(&spec.ket, ctx)?;
    let wp = ctx.working();
    let power = wp.rational(&(spec.mu_star() - RBig::ONE));
    let xi = wp.rational(spec.xi());
    let peak = (spec.n_total() + spec.mu_star()) / (spec.eps_sum() + spec.xi());
    let scale = wp.rational(&peak.max(RBig::ONE / RBig::from(4)));
    let integrand = |r: &HighPrecReal| -> HighPrecReal {
        if r.is_zero() {
            return wp.zero();
        }
        let f = (&power * &r.ln() - &xi * r).exp();
        let orbitals = bra.eval(r).expect("r > 0") * ket.eval(r).expect("r > 0");
        orbitals * f * r * r
    };
    integrate_half_line(integrand, &scale, tol_bits, ctx)
}

/// Exact moments `J^{n+s} / T_J` for `s = 0..count`, where
/// `J^κ = T_J (N*+2)_κ / (ζ+ζ')^κ` and `T_J = N Γ(N*+2) / (ζ+ζ')^{N*+2}`.
pub(crate) fn scaled_moments(spec: &IntegralSpec, n_int: u32, count: u32) -> Vec<RBig> {
    let shift = spec.n_total() + RBig::from(2);
    let eps = spec.eps_sum();
    let mut rising = RBig::ONE;
    let mut k = 0u32;
    let mut out = Vec::with_capacity(count as usize);
    while out.len() < count as usize {
        if k >= n_int {
            out.push(&rising / pow_rational(&eps, k as i64));
        }
        rising *= &shift + RBig::from(k);
        k += 1;
    }
    out
}

/// `T_J = N Γ(N*+2) / (ζ+ζ')^{N*+2}`.
pub(crate) fn moment_base(spec: &IntegralSpec, wp: &PrecisionContext) -> Result<HighPrecReal> {
    let a = spec.n_total() + RBig::from(2);
    scaled_gamma(&spec.bra, &spec.ket, &a, &spec.eps_sum(), wp)
}

/// Exact partial sums (in units of `T_A T_J`) for every order up to `n_max`.
pub(crate) fn series_partial_sums(
    spec: &IntegralSpec,
    basis: Basis,
    form: Form,
    n_max: u32,
) -> Result<(Expansion, Vec<(u32, RBig)>)> {
    let kernel = spec.power_function()?;
    let expansion = Expansion::up_to(basis, &kernel.eta_star, &kernel.xi, n_max)?;
    let moments = scaled_moments(spec, kernel.n_int, basis.max_power(n_max) + 1);
    let sums = match form {
        Form::Arranged => expansion.arranged_partial_sums(n_max, &moments)?,
        Form::Rearranged => expansion.rearranged_partial_sums(n_max, &moments)?,
    };
    Ok((expansion, sums))
}

/// Common transcendental factor `T_A T_J` of every series partial sum.
pub(crate) fn series_scale(spec: &IntegralSpec, expansion: &Expansion, wp: &PrecisionContext) -> Result<HighPrecReal> {
    Ok(expansion.leading_factor(wp)? * moment_base(spec, wp)?)
}

/// Order-`N` truncation of the Laguerre-series representation of the integral.
pub fn series_i(spec: &IntegralSpec, basis: Basis, form: Form, n: u32, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    let (expansion, sums) = series_partial_sums(spec, basis, form, n)?;
    let wp = ctx.working();
    let (_, last) = sums.last().expect("order at least the first index");
    Ok((series_scale(spec, &expansion, &wp)? * wp.rational(last)).round_to(ctx))
}
