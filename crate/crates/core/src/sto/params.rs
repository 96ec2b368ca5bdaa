use dashu::rational::RBig;

use crate::error::{Error, Result};
use crate::expansions::{split_mu_star, PowerFunctionSpec};
use crate::numerics::{gamma_rational, HighPrecReal, PrecisionContext};

/// Slater-type orbital `R_{n*}(ζ, r) = (2ζ)^{n*+1/2} Γ(2n*+1)^{−1/2} r^{n*−1} e^{−ζr}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoParams {
    n_star: RBig,
    zeta: RBig,
}

impl StoParams {
    pub fn new(n_star: RBig, zeta: RBig) -> Result<Self> {
        if n_star <= RBig::ZERO {
            return Err(Error::InvalidParameter(format!("n* = {n_star} must be positive")));
        }
        if zeta <= RBig::ZERO {
            return Err(Error::InvalidParameter(format!("zeta = {zeta} must be positive")));
        }
        Ok(Self { n_star, zeta })
    }

    pub fn n_star(&self) -> &RBig {
        &self.n_star
    }

    pub fn zeta(&self) -> &RBig {
        &self.zeta
    }

    /// `ln[(2ζ)^{n*+1/2} / √Γ(2n*+1)]`.
    pub(crate) fn log_normalization(&self, wp: &PrecisionContext) -> Result<HighPrecReal> {
        let two = RBig::from(2);
        let half = RBig::ONE / &two;
        let power = wp.rational(&(&self.n_star + &half)) * wp.rational(&(&two * &self.zeta)).ln();
        let gamma = gamma_rational(&(&two * &self.n_star + RBig::ONE), wp)?;
        Ok(power - wp.rational(&half) * gamma.ln())
    }
}

/// Evaluator for one orbital with its normalization computed once.
#[derive(Clone, Debug)]
pub struct StoRadial {
    log_norm: HighPrecReal,
    power: HighPrecReal,
    rate: HighPrecReal,
    n_star: RBig,
    ctx: PrecisionContext,
}

impl StoRadial {
    pub fn new(p: &StoParams, ctx: &PrecisionContext) -> Result<Self> {
        let wp = ctx.working();
        Ok(Self {
            log_norm: p.log_normalization(&wp)?,
            power: wp.rational(&(p.n_star() - RBig::ONE)),
            rate: wp.rational(p.zeta()),
            n_star: p.n_star().clone(),
            ctx: *ctx,
        })
    }

    pub fn eval(&self, r: &HighPrecReal) -> Result<HighPrecReal> {
        if r.is_negative() {
            return Err(Error::InvalidParameter(format!("r must be nonnegative, got {r}")));
        }
        if r.is_zero() {
            return match self.n_star.cmp(&RBig::ONE) {
                std::cmp::Ordering::Less => Err(Error::PoleAtOrigin(-1)),
                std::cmp::Ordering::Equal => Ok(self.log_norm.exp().round_to(&self.ctx)),
                std::cmp::Ordering::Greater => Ok(self.ctx.zero()),
            };
        }
        let log = &self.log_norm + &(&self.power * &r.ln()) - &self.rate * r;
        Ok(log.exp().round_to(&self.ctx))
    }
}

/// `R_{n*}(ζ, r)`.
pub fn sto_radial(p: &StoParams, r: &HighPrecReal, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    StoRadial::new(p, ctx)?.eval(r)
}

/// One radial integral: two orbitals, the kernel exponent `μ* ≥ 1` and screening `ξ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSpec {
    pub bra: StoParams,
    pub ket: StoParams,
    mu_star: RBig,
    xi: RBig,
}

impl IntegralSpec {
    pub fn new(bra: StoParams, ket: StoParams, mu_star: RBig, xi: RBig) -> Result<Self> {
        if mu_star < RBig::ONE {
            return Err(Error::InvalidParameter(format!("mu* = {mu_star} is below 1")));
        }
        if xi < RBig::ZERO {
            return Err(Error::InvalidParameter(format!("xi = {xi} is negative")));
        }
        Ok(Self { bra, ket, mu_star, xi })
    }

    pub fn mu_star(&self) -> &RBig {
        &self.mu_star
    }

    pub fn xi(&self) -> &RBig {
        &self.xi
    }

    /// `N* = n* + n'* − 1`.
    pub fn n_total(&self) -> RBig {
        self.bra.n_star() + self.ket.n_star() - RBig::ONE
    }

    /// Exponent sum `ζ + ζ'`.
    pub fn eps_sum(&self) -> RBig {
        self.bra.zeta() + self.ket.zeta()
    }

    pub fn power_function(&self) -> Result<PowerFunctionSpec> {
        split_mu_star(&self.mu_star)?.with_xi(self.xi.clone())
    }
}
