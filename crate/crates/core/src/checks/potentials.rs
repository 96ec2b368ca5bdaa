//! Core attraction and frictional potentials of the radial Schrödinger-type
//! equation satisfied by `R^α_{nl}`.
//!
//! With `x = 2ζr`:
//! `U_n = −2ζ²n/x`,
//! `U^α_{nl} = −2ζ²(1−α)/x · (𝓛'/𝓛 − l/x) = −2ζ²(1−α)/x · L_q^{p+1}/L_q^p`,
//! `V^α_{nl} = U_n + U^α_{nl}` and energy `ε = −ζ²/2`.

use dashu::rational::RBig;

use crate::error::{Error, Result};
use crate::laguerre::{glp_nonstandard, ltp_poly, GlpIndices, LtpIndices, RadialScale};
use crate::numerics::{HighPrecReal, PrecisionContext};

#[derive(Clone, Debug, PartialEq)]
pub struct PotentialDecomposition {
    /// Core attraction `U_n`.
    pub core: HighPrecReal,
    /// Frictional potential from the logarithmic derivative of `𝓛`.
    pub frictional: HighPrecReal,
    /// Frictional potential from the ratio `L_q^{p+1}/L_q^p`.
    pub frictional_ratio: HighPrecReal,
    /// `core + frictional`.
    pub total: HighPrecReal,
    /// Bound-state energy `−ζ²/2`.
    pub energy: HighPrecReal,
}

fn singular(what: &'static str, x: &RBig, ctx: &PrecisionContext) -> Error {
    Error::SingularPoint {
        what,
        x: ctx.rational(x).to_sci_string(20),
    }
}

/// Potentials at radius `r > 0`. Both frictional forms are evaluated in exact
/// arithmetic at the (dyadic) point `x` and rounded once.
pub fn potentials(
    idx: LtpIndices,
    scale: &RadialScale,
    r: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<PotentialDecomposition> {
    if !r.is_positive() {
        return Err(Error::InvalidParameter(format!("r must be positive, got {r}")));
    }
    let wp = ctx.working();
    let x = scale.to_x(r, &wp).to_rational();
    let zeta = scale.zeta().to_rational();
    let zeta_sq = &zeta * &zeta;
    let (alpha, n, l) = (idx.alpha() as i64, idx.n() as i64, idx.l() as i64);

    let core = -RBig::from(2 * n) * &zeta_sq / &x;
    let prefactor = -RBig::from(2 * (1 - alpha)) * &zeta_sq / &x;

    let f = ltp_poly(idx);
    let f_value = f.eval_exact(&x)?;
    if f_value.is_zero() {
        return Err(singular("L^alpha_nl", &x, ctx));
    }
    let df_value = f.derivative().eval_exact(&x)?;
    // 𝓛 and 𝓛' share their radical factor, so the ratio is rational.
    let log_derivative = if df_value.is_zero() {
        RBig::ZERO
    } else {
        df_value.rational() / f_value.rational()
    };
    let frictional = &prefactor * (log_derivative - RBig::from(l) / &x);

    let (q, p) = (idx.q(), idx.p());
    let base = glp_nonstandard(GlpIndices::new(q, p)?).eval_exact(&x)?;
    if base.is_zero() {
        return Err(singular("L_q^p", &x, ctx));
    }
    let shifted = if p < q {
        glp_nonstandard(GlpIndices::new(q, p + 1)?).eval_exact(&x)?
    } else {
        crate::numerics::RadicalScaled::zero()
    };
    let frictional_ratio = &prefactor * (shifted.rational() / base.rational());

    let total = &core + &frictional;
    let energy = -zeta_sq / RBig::from(2);
    Ok(PotentialDecomposition {
        core: ctx.rational(&core),
        frictional: ctx.rational(&frictional),
        frictional_ratio: ctx.rational(&frictional_ratio),
        total: ctx.rational(&total),
        energy: ctx.rational(&energy),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn idx(alpha: i32, n: u32, l: u32) -> LtpIndices {
        LtpIndices::new(alpha, n, l).unwrap()
    }

    #[test]
    fn examples() {
        let ctx = PrecisionContext::default();
        let one = RadialScale::new(ctx.one()).unwrap();
        let d = potentials(idx(0, 2, 0), &one, &ctx.parse("0.5").unwrap(), &ctx).unwrap();
        assert_eq!(d.core, ctx.int(-4));
        assert_eq!(d.frictional, ctx.one());
        assert_eq!(d.frictional_ratio, ctx.one());
        assert_eq!(d.total, ctx.int(-3));
        assert_eq!(d.energy, ctx.parse("-0.5").unwrap());

        let d = potentials(idx(0, 1, 0), &one, &ctx.parse("2.75").unwrap(), &ctx).unwrap();
        assert!(d.frictional.is_zero());
        for (n, l) in [(3, 1), (5, 2), (4, 0)] {
            let d = potentials(idx(1, n, l), &one, &ctx.parse("0.77").unwrap(), &ctx).unwrap();
            assert!(d.frictional.is_zero() && d.frictional_ratio.is_zero());
        }
    }

    #[test]
    fn node_is_singular() {
        let ctx = PrecisionContext::default();
        // 𝓛^0_{20} ∝ 3 − x vanishes at x = 3.
        let scale = RadialScale::new(ctx.parse("0.5").unwrap()).unwrap();
        let err = potentials(idx(0, 2, 0), &scale, &ctx.int(3), &ctx).unwrap_err();
        assert!(matches!(err, Error::SingularPoint { .. }));
        assert!(potentials(idx(0, 2, 0), &scale, &ctx.zero(), &ctx).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn both_frictional_forms_agree(alpha in -2i32..=2, n in 1u32..8, l_frac in 0.0f64..1.0, r_milli in 1u32..20000) {
            let l = ((n as f64) * l_frac) as u32;
            let ctx = PrecisionContext::default();
            let scale = RadialScale::new(ctx.parse("1.3").unwrap()).unwrap();
            let r = ctx.int(r_milli as i64) / ctx.int(1000);
            match potentials(idx(alpha, n, l.min(n - 1)), &scale, &r, &ctx) {
                Ok(d) => {
                    prop_assert!(d.frictional.ulps_between(&d.frictional_ratio, 256) <= 8.0);
                    let gap = (&(&d.total - &d.core) - &d.frictional).abs();
                    let scale = &(d.core.abs() + d.frictional.abs()) * &ctx.int(2).powi(-254);
                    prop_assert!(gap <= scale);
                }
                Err(e) => prop_assert!(matches!(e, Error::SingularPoint { .. }), "{}", e),
            }
        }
    }
}
