//! Double-exponential quadrature on the half line.
//!
//! Uses the substitution `r = s · exp(t − e^{−t})`, which gives double
//! exponential decay at both ends for integrands that vanish algebraically at
//! the origin and exponentially at infinity. The trapezoidal rule in `t` is
//! refined by halving the step until two levels agree.

use super::real::{HighPrecReal, PrecisionContext};
use crate::error::{Error, Result};

const MAX_LEVEL: u32 = 14;
const MAX_ABS_T: i64 = 16;

/// `∫₀^∞ f(r) dr` to about `tol_bits` relative bits.
///
/// `scale` should sit near the bulk of the integrand so that the transformed
/// integrand peaks close to `t = 0`.
pub fn integrate_half_line<F>(
    f: F,
    scale: &HighPrecReal,
    tol_bits: usize,
    ctx: &PrecisionContext,
) -> Result<HighPrecReal>
where
    F: Fn(&HighPrecReal) -> HighPrecReal,
{
    let wp = ctx.working();
    let scale = scale.round_to(&wp);
    let node = |t: &HighPrecReal| -> HighPrecReal {
        let decay = (-t).exp();
        let r = &scale * &(t - &decay).exp();
        let jacobian = &r * &(&wp.one() + &decay);
        f(&r) * jacobian
    };
    let negligible = wp.int(2).powi(-(wp.bits() as i64 + 8));
    let tol = wp.int(2).powi(-(tol_bits as i64));

    // Sum node(k h) over k ≡ offset (mod stride), walking outward from t = 0
    // until the terms fall below the working precision.
    let sweep = |h: &HighPrecReal, start: i64, stride: i64, reference: &HighPrecReal| -> Result<HighPrecReal> {
        let mut total = wp.zero();
        for direction in [1i64, -1] {
            let mut k = if direction == 1 { start } else { start - stride };
            let mut quiet = 0;
            loop {
                let t = h * &wp.int(k);
                let term = node(&t);
                total = &total + &term;
                let scale_ref = if reference.is_zero() {
                    total.abs()
                } else {
                    reference.abs()
                };
                if term.abs() <= &scale_ref * &negligible && t.abs() > wp.int(2) {
                    quiet += 1;
                    if quiet >= 3 {
                        break;
                    }
                } else {
                    quiet = 0;
                }
                if t.abs() > wp.int(MAX_ABS_T) {
                    return Err(Error::Quadrature("integrand does not decay".into()));
                }
                k += direction * stride;
            }
        }
        Ok(total)
    };

    let mut h = wp.parse("0.5")?;
    let mut estimate = &h * &sweep(&h, 0, 1, &wp.zero())?;
    for _ in 1..=MAX_LEVEL {
        h = &h * &wp.parse("0.5")?;
        let odd = sweep(&h, 1, 2, &estimate)?;
        let refined = &(&estimate * &wp.parse("0.5")?) + &(&h * &odd);
        let change = (&refined - &estimate).abs();
        estimate = refined;
        if change <= &estimate.abs() * &tol {
            return Ok(estimate.round_to(ctx));
        }
    }
    Err(Error::Quadrature(format!(
        "no agreement to {tol_bits} bits after {MAX_LEVEL} refinements"
    )))
}
