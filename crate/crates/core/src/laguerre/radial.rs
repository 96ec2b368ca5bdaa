//! Radial parts `R^α_{nl}(ζ, r) = (2ζ)^{3/2} e^{−x/2} 𝓛^α_{nl}(x)`, `x = 2ζr`.

use super::indices::LtpIndices;
use super::ltp::{ltp_poly, ltp_weighted_poly};
use super::poly::ExactPolynomial;
use crate::error::{Error, Result};
use crate::numerics::{HighPrecReal, PrecisionContext};

/// Orbital exponent `ζ > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialScale {
    zeta: HighPrecReal,
}

impl RadialScale {
    pub fn new(zeta: HighPrecReal) -> Result<Self> {
        if !zeta.is_positive() {
            return Err(Error::InvalidParameter(format!("zeta must be positive, got {zeta}")));
        }
        Ok(Self { zeta })
    }

    pub fn zeta(&self) -> &HighPrecReal {
        &self.zeta
    }

    /// `x = 2ζr` at the given precision.
    pub fn to_x(&self, r: &HighPrecReal, wp: &PrecisionContext) -> HighPrecReal {
        (&(&wp.int(2) * &self.zeta) * r).round_to(wp)
    }
}

/// `e^{−x/2} p(x)` for a radial polynomial, without the `(2ζ)^{3/2}` factor.
pub(crate) fn reduced_radial(poly: &ExactPolynomial, x: &HighPrecReal, wp: &PrecisionContext) -> Result<HighPrecReal> {
    let half = wp.parse("0.5")?;
    let envelope = (-(x * &half)).exp();
    Ok(poly.eval(x, wp)? * envelope)
}

fn radial_with(
    poly: &ExactPolynomial,
    scale: &RadialScale,
    r: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    if r.is_negative() {
        return Err(Error::InvalidParameter(format!("r must be nonnegative, got {r}")));
    }
    let wp = ctx.working();
    let x = scale.to_x(r, &wp);
    let two_zeta = &wp.int(2) * scale.zeta();
    let prefactor = &two_zeta * &two_zeta.sqrt();
    Ok((prefactor * reduced_radial(poly, &x, &wp)?).round_to(ctx))
}

/// `R^α_{nl}(ζ, r)`.
pub fn radial_r(
    idx: LtpIndices,
    scale: &RadialScale,
    r: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    radial_with(&ltp_poly(idx), scale, r, ctx)
}

/// `R̄^α_{nl}(ζ, r)`, the weighted partner; singular at `r = 0` when `α > 0`.
pub fn radial_r_weighted(
    idx: LtpIndices,
    scale: &RadialScale,
    r: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal> {
    if idx.alpha() > 0 && r.is_zero() {
        return Err(Error::PoleAtOrigin(-(idx.alpha() as i64)));
    }
    radial_with(&ltp_weighted_poly(idx), scale, r, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    const E_INV_SQRT2: &str =
        "0.260130047511444448179076221658166269043065400794555460420443787565320582851082986017148638";
    const TWO_E_HALF: &str =
        "1.21306131942526684720759906998236090688383627097437391136578431747011303882749684799729522";

    fn idx(alpha: i32, n: u32, l: u32) -> LtpIndices {
        LtpIndices::new(alpha, n, l).unwrap()
    }

    fn close(a: &HighPrecReal, b: &HighPrecReal) -> bool {
        a.ulps_between(b, 256) <= 4.0
    }

    #[test]
    fn radial_examples() {
        let ctx = PrecisionContext::default();
        let half = RadialScale::new(ctx.parse("0.5").unwrap()).unwrap();
        let v = radial_r(idx(0, 1, 0), &half, &ctx.zero(), &ctx).unwrap();
        assert!(close(&v, &ctx.parse("0.5").unwrap().sqrt()));

        let zeta = RadialScale::new(ctx.parse("1.7").unwrap()).unwrap();
        let node = ctx.int(3) / (ctx.int(2) * ctx.parse("1.7").unwrap());
        let v = radial_r(idx(0, 2, 0), &zeta, &node, &ctx).unwrap();
        assert!(v.abs().to_f64() < 1e-70);

        let v = radial_r(idx(1, 1, 0), &half, &ctx.int(2), &ctx).unwrap();
        assert!(close(&v, &ctx.parse(E_INV_SQRT2).unwrap()));
    }

    #[test]
    fn weighted_examples() {
        let ctx = PrecisionContext::default();
        let half = RadialScale::new(ctx.parse("0.5").unwrap()).unwrap();
        for r in ["0.3", "1", "4.5"] {
            let r = ctx.parse(r).unwrap();
            let a = radial_r(idx(0, 3, 1), &half, &r, &ctx).unwrap();
            let b = radial_r_weighted(idx(0, 3, 1), &half, &r, &ctx).unwrap();
            assert_eq!(a, b);
        }
        let v = radial_r_weighted(idx(1, 1, 0), &half, &ctx.int(2), &ctx).unwrap();
        assert!(close(&v, &ctx.parse(E_INV_SQRT2).unwrap()));
        let v = radial_r_weighted(idx(2, 1, 0), &half, &ctx.one(), &ctx).unwrap();
        assert!(close(&v, &ctx.parse(TWO_E_HALF).unwrap()));
        assert!(radial_r_weighted(idx(1, 1, 0), &half, &ctx.zero(), &ctx).is_err());
    }

    #[test]
    fn rejects_bad_scale() {
        let ctx = PrecisionContext::default();
        assert!(RadialScale::new(ctx.zero()).is_err());
        assert!(RadialScale::new(ctx.int(-1)).is_err());
    }
}
