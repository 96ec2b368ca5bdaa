//! Generalized Laguerre polynomials in the nonstandard and standard conventions.
//!
//! The nonstandard `L_μ^ν` carries an extra `(−1)^ν μ!` relative to the
//! standard `L^{(ν)}_{μ−ν}`.

use dashu::integer::IBig;
use dashu::rational::RBig;

use super::indices::GlpIndices;
use super::poly::ExactPolynomial;
use crate::numerics::{binomial, factorial_u};

/// Binomial coefficient `F_m(n) = n! / (m! (n−m)!)`, exactly zero for `m < 0` or `m > n`.
pub fn binom_f(m: i64, n: i64) -> IBig {
    binomial(n, m)
}

fn sign(exponent: i64) -> IBig {
    if exponent.rem_euclid(2) == 0 {
        IBig::ONE
    } else {
        IBig::NEG_ONE
    }
}

/// Coefficient of `x^s` in the nonstandard `L_μ^ν(x)`:
/// `(−1)^{ν+s} (μ−s)! F_s(μ) F_{ν+s}(μ)`, zero outside `0 ≤ s ≤ μ−ν`.
pub fn beta_coeff(g: GlpIndices, s: i64) -> IBig {
    let (mu, nu) = (g.mu() as i64, g.nu() as i64);
    if s < 0 || s > mu - nu {
        return IBig::ZERO;
    }
    sign(nu + s) * factorial_u((mu - s) as u64) * binom_f(s, mu) * binom_f(nu + s, mu)
}

/// Nonstandard `L_μ^ν(x) = Σ_{s=0}^{μ−ν} β_{μs}^ν x^s`.
pub fn glp_nonstandard(g: GlpIndices) -> ExactPolynomial {
    let top = (g.mu() - g.nu()) as i64;
    let coeffs = (0..=top).map(|s| RBig::from(beta_coeff(g, s))).collect();
    ExactPolynomial::from_rational(0, coeffs)
}

/// Standard `L^{(order)}_{degree}(x) = Σ_k (−1)^k F_{m−k}(m+p) x^k / k!`.
pub fn glp_standard(degree: u32, order: u32) -> ExactPolynomial {
    let (m, p) = (degree as i64, order as i64);
    let coeffs = (0..=m)
        .map(|k| {
            let num = sign(k) * binom_f(m - k, m + p);
            RBig::from(num) / RBig::from(factorial_u(k as u64))
        })
        .collect();
    ExactPolynomial::from_rational(0, coeffs)
}
