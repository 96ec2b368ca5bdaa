use dashu::rational::RBig;

use crate::error::Result;
use crate::numerics::{gamma_rational, HighPrecReal, PrecisionContext};

/// `b^a` for exact rationals `b > 0` and `a`, at the precision of `wp`.
pub(crate) fn rational_power(base: &RBig, exponent: &RBig, wp: &PrecisionContext) -> HighPrecReal {
    if *exponent == RBig::ZERO || *base == RBig::ONE {
        return wp.one();
    }
    (wp.rational(exponent) * wp.rational(base).ln()).exp()
}

/// `Γ(a + c) / b^{a + c}` for integer steps `c ≥ 1`, written as
/// `Γ(a + 1) / b^{a + 1}` times the exact ratio `(a + 1)_{c−1} / b^{c−1}`.
#[derive(Clone, Debug)]
pub(crate) struct GammaLadder {
    shift: RBig,
    base: RBig,
    ratios: Vec<RBig>,
}

impl GammaLadder {
    pub(crate) fn new(eta_star: &RBig, base: &RBig) -> Self {
        Self {
            shift: eta_star + RBig::ONE,
            base: base.clone(),
            ratios: vec![RBig::ONE],
        }
    }

    /// Exact `(a + 1)_{c−1} / b^{c−1}`.
    pub(crate) fn ratio(&mut self, c: u32) -> &RBig {
        assert!(c >= 1, "gamma ladder starts at step 1");
        while self.ratios.len() < c as usize {
            let k = self.ratios.len() - 1;
            let next = self.ratios[k].clone() * (&self.shift + RBig::from(k)) / &self.base;
            self.ratios.push(next);
        }
        &self.ratios[c as usize - 1]
    }

    /// `Γ(a + 1) / b^{a + 1}`.
    pub(crate) fn leading(&self, ctx: &PrecisionContext) -> Result<HighPrecReal> {
        let wp = ctx.working();
        let value = gamma_rational(&self.shift, &wp)? / rational_power(&self.base, &self.shift, &wp);
        Ok(value.round_to(ctx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{gamma, rational};

    #[test]
    fn ladder_matches_direct_gamma() {
        let ctx = PrecisionContext::default();
        let eta = rational(3, 10);
        let base = rational(61, 10);
        let mut ladder = GammaLadder::new(&eta, &base);
        let lead = ladder.leading(&ctx).unwrap();
        for c in 1..=12u32 {
            let arg = &eta + RBig::from(c);
            let direct = gamma(&ctx.rational(&arg), &ctx).unwrap() / rational_power(&base, &arg, &ctx);
            let via = &lead * &ctx.rational(ladder.ratio(c));
            assert!(via.ulps_between(&direct, 256) <= 16.0, "c={c}");
        }
    }
}
