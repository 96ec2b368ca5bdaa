use dashu::rational::RBig;

use crate::error::{Error, Result};
use crate::laguerre::{glp_nonstandard, glp_standard, ltp_poly, ExactPolynomial, GlpIndices, LtpIndices};
use crate::numerics::{factorial_u, HighPrecReal, PrecisionContext};

fn int(v: i64) -> RBig {
    RBig::from(v)
}

/// `x L'' + (p+1−x) L' + (q−p) L` for `L = L_q^p`, as an exact polynomial.
pub fn glp_ode_residual_poly(g: GlpIndices) -> Result<ExactPolynomial> {
    let (q, p) = (g.mu() as i64, g.nu() as i64);
    let l0 = glp_nonstandard(g);
    let l1 = l0.derivative();
    let l2 = l1.derivative();
    l2.shift(1)
        .try_add(&l1.scale(&int(p + 1)))?
        .try_sub(&l1.shift(1))?
        .try_add(&l0.scale(&int(q - p)))
}

fn check_positive(x: &HighPrecReal) -> Result<()> {
    if !x.is_positive() {
        return Err(Error::InvalidParameter(format!("x must be positive, got {x}")));
    }
    Ok(())
}

/// The GLP differential equation evaluated term by term at `x`.
pub fn ode_residual_glp(g: GlpIndices, x: &HighPrecReal, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    check_positive(x)?;
    let wp = ctx.working();
    let (q, p) = (g.mu() as i64, g.nu() as i64);
    let l0 = glp_nonstandard(g);
    let l1 = l0.derivative();
    let l2 = l1.derivative();
    let v0 = l0.eval(x, &wp)?;
    let v1 = l1.eval(x, &wp)?;
    let v2 = l2.eval(x, &wp)?;
    let residual = x * &v2 + (&wp.int(p + 1) - x) * v1 + wp.int(q - p) * v0;
    Ok(residual.round_to(ctx))
}

/// `x · [x𝓛'' + (3−α−x)𝓛' − (1−n)𝓛] − (l(l+1) + l(1−α)) 𝓛`, the LTP
/// differential equation cleared of its `1/x` term.
pub fn ltp_ode_residual_poly(idx: LtpIndices) -> Result<ExactPolynomial> {
    let (alpha, n, l) = (idx.alpha() as i64, idx.n() as i64, idx.l() as i64);
    let f0 = (*ltp_poly(idx)).clone();
    let f1 = f0.derivative();
    let f2 = f1.derivative();
    let bracket = f2
        .shift(1)
        .try_add(&f1.scale(&int(3 - alpha)))?
        .try_sub(&f1.shift(1))?
        .try_sub(&f0.scale(&int(1 - n)))?;
    bracket.shift(1).try_sub(&f0.scale(&int(l * (l + 1) + l * (1 - alpha))))
}

/// The LTP differential equation evaluated term by term at `x`.
pub fn ode_residual_ltp(idx: LtpIndices, x: &HighPrecReal, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    check_positive(x)?;
    let wp = ctx.working();
    let (alpha, n, l) = (idx.alpha() as i64, idx.n() as i64, idx.l() as i64);
    let f0 = ltp_poly(idx);
    let f1 = f0.derivative();
    let f2 = f1.derivative();
    let v0 = f0.eval(x, &wp)?;
    let v1 = f1.eval(x, &wp)?;
    let v2 = f2.eval(x, &wp)?;
    let centrifugal = wp.int(l * (l + 1) + l * (1 - alpha)) / x;
    let residual = x * &v2 + (&wp.int(3 - alpha) - x) * v1 - (wp.int(1 - n) + centrifugal) * v0;
    Ok(residual.round_to(ctx))
}

/// `d^k L_q^p / dx^k − L_q^{p+k}`, which vanishes identically.
pub fn derivative_shift_check(g: GlpIndices, k: u32) -> Result<ExactPolynomial> {
    let (q, p) = (g.mu(), g.nu());
    if p + k > q {
        return Err(Error::InvalidIndices(format!("p + k = {} exceeds q = {q}", p + k)));
    }
    glp_nonstandard(g)
        .nth_derivative(k)
        .try_sub(&glp_nonstandard(GlpIndices::new(q, p + k)?))
}

/// `L_q^p − (−1)^p q! L^{(p)}_{q−p}`, the residual of the convention bridge.
pub fn convention_bridge_residual(g: GlpIndices) -> Result<ExactPolynomial> {
    let (q, p) = (g.mu(), g.nu());
    let mut factor = RBig::from(factorial_u(q as u64));
    if p % 2 == 1 {
        factor = -factor;
    }
    glp_nonstandard(g).try_sub(&glp_standard(q - p, p).scale(&factor))
}
