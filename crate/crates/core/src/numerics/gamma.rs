//! Gamma function for positive real arguments.
//!
//! Arguments are reduced by the exact recurrence to `f` in `[1, 2)`, and
//! `Γ(f)` is taken from the lower incomplete gamma series
//!
//! ```text
//! γ(f, X) = X^f e^{-X} Σ_{k≥0} X^k / (f (f+1) ... (f+k))
//! ```
//!
//! with the integer cutoff `X` chosen so the neglected upper tail
//! `Γ(f, X) < 2 X e^{-X}` sits below the working precision. Every term of the
//! series is positive, so there is no cancellation to guard against.

use dashu::integer::IBig;

use super::real::{HighPrecReal, PrecisionContext};
use super::{pochhammer, BigRational};
use crate::error::{Error, Result};

/// `Γ(a)` for `a > 0`, rounded to `ctx`.
pub fn gamma(a: &HighPrecReal, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    if !a.is_positive() {
        return Err(Error::NonPositiveGamma(a.to_sci_string(20)));
    }
    let wp = ctx.working();
    let one = wp.one();
    let a = a.round_to(&wp.with_guard(a.precision()));
    if a < one {
        let shifted = (&a + &one).round_to(&wp);
        let value = gamma_unit_interval(&shifted, &wp) / &a;
        return Ok(value.round_to(ctx));
    }
    let steps = a.floor_int() - IBig::ONE;
    let f = &a - &wp.int(steps.clone());
    let mut value = gamma_unit_interval(&f.round_to(&wp), &wp);
    let mut factor = f.round_to(&wp);
    let steps: u64 = steps.try_into().expect("gamma argument too large");
    for _ in 0..steps {
        value = &value * &factor;
        factor = &factor + &one;
    }
    Ok(value.round_to(ctx))
}

/// `Γ(a)` for an exact positive rational. The integer shift is applied as an
/// exact Pochhammer product, so only `Γ(f)` with `f ∈ [1, 2)` is transcendental.
pub fn gamma_rational(a: &BigRational, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    if *a <= BigRational::ZERO {
        return Err(Error::NonPositiveGamma(format!("{a}")));
    }
    let wp = ctx.working();
    if *a < BigRational::ONE {
        let f = a + BigRational::ONE;
        let value = gamma_unit_interval(&wp.rational(&f), &wp) / wp.rational(a);
        return Ok(value.round_to(ctx));
    }
    let steps = a.floor() - IBig::ONE;
    let f = a - BigRational::from(steps.clone());
    let steps: u32 = steps.try_into().expect("gamma argument too large");
    let value = gamma_unit_interval(&wp.rational(&f), &wp) * wp.rational(&pochhammer(&f, steps));
    Ok(value.round_to(ctx))
}

fn series_cutoff(bits: usize) -> u64 {
    let target = (bits as f64 + 8.0) * std::f64::consts::LN_2 + 1.0;
    let mut x = target.ceil() as u64;
    while (x as f64) - (x as f64).ln() <= target {
        x += 1;
    }
    x
}

/// `Γ(f)` for `f ∈ [1, 2)` at the precision of `wp`.
fn gamma_unit_interval(f: &HighPrecReal, wp: &PrecisionContext) -> HighPrecReal {
    let cutoff = series_cutoff(wp.bits());
    let x = wp.int(cutoff);
    let f = f.round_to(wp);
    let mut term = f.recip();
    let mut sum = term.clone();
    let mut denom = f.clone();
    let threshold_shift = wp.bits() as i64 + 8;
    let mut k: u64 = 0;
    loop {
        k += 1;
        denom = &denom + &wp.one();
        term = &(&term * &x) / &denom;
        sum = &sum + &term;
        if k > 2 * cutoff {
            // The remaining terms shrink by at least half each step.
            let bound = &sum * &wp.int(2).powi(-threshold_shift);
            if term < bound {
                break;
            }
        }
    }
    let log_prefactor = &(&f * &x.ln()) - &x;
    log_prefactor.exp() * sum
}
