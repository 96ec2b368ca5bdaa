//! L^α Laguerre-type polynomials.
//!
//! `𝓛^α_{nl}(x) = Σ_{k=l}^{n−1} Π^{αl}_{nk} x^k` with
//! `Π^{αl}_{nk} = (−1)^{k−l} √[(q−p)! / ((2n)^α q!)] · F_{p+k−l}(q) / (k−l)!`.
//! The weighted partner is `𝓛̄ = (2n/x)^α 𝓛`; the pair is biorthonormal
//! under `e^{−x} x² dx`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use dashu::rational::RBig;

use super::glp::{binom_f, glp_nonstandard, glp_standard};
use super::indices::{GlpIndices, LtpIndices};
use super::poly::ExactPolynomial;
use crate::numerics::{factorial_u, pow_rational, RadicalScaled};

/// `(2n)^α` as an exact rational (α may be negative).
pub(crate) fn two_n_pow_alpha(idx: LtpIndices) -> RBig {
    pow_rational(&RBig::from(2 * idx.n() as i64), idx.alpha() as i64)
}

/// Square of the normalization bracket, `(q−p)! / ((2n)^α q!)`.
pub fn norm_sq(idx: LtpIndices) -> RBig {
    let num = RBig::from(factorial_u((idx.q() - idx.p()) as u64));
    num / (two_n_pow_alpha(idx) * RBig::from(factorial_u(idx.q() as u64)))
}

/// `Π^{αl}_{nk}` without its square-root normalization:
/// `(−1)^{k−l} F_{p+k−l}(q) / (k−l)!`, zero for `k < l` or `k > n−1`.
pub fn pi_rational(idx: LtpIndices, k: i64) -> RBig {
    let (l, n) = (idx.l() as i64, idx.n() as i64);
    if k < l || k > n - 1 {
        return RBig::ZERO;
    }
    let j = k - l;
    let mut value = RBig::from(binom_f(idx.p() as i64 + j, idx.q() as i64));
    value /= RBig::from(factorial_u(j as u64));
    if j % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Exact coefficient `Π^{αl}_{nk}`.
pub fn pi_coeff(idx: LtpIndices, k: i64) -> RadicalScaled {
    RadicalScaled::new(pi_rational(idx, k), &norm_sq(idx))
}

fn build_ltp(idx: LtpIndices) -> ExactPolynomial {
    let coeffs = (idx.l() as i64..idx.n() as i64).map(|k| pi_rational(idx, k)).collect();
    ExactPolynomial::new(idx.l() as i64, coeffs, RadicalScaled::sqrt_of(&norm_sq(idx)))
}

type Cache = RwLock<HashMap<LtpIndices, Arc<ExactPolynomial>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `𝓛^α_{nl}` from its coefficient formula, memoized per index triple.
pub fn ltp_poly(idx: LtpIndices) -> Arc<ExactPolynomial> {
    if let Some(hit) = cache().read().expect("ltp cache poisoned").get(&idx) {
        return Arc::clone(hit);
    }
    let built = Arc::new(build_ltp(idx));
    let mut guard = cache().write().expect("ltp cache poisoned");
    Arc::clone(guard.entry(idx).or_insert(built))
}

/// Weighted partner `𝓛̄^α_{nl}(x) = (2n/x)^α 𝓛^α_{nl}(x)`; a Laurent
/// polynomial when `l < α`.
pub fn ltp_weighted_poly(idx: LtpIndices) -> ExactPolynomial {
    ltp_poly(idx).scale(&two_n_pow_alpha(idx)).shift(-(idx.alpha() as i64))
}

/// `√[(q−p)! / ((2n)^α (q!)³)]`, the bracket multiplying `x^l L_q^p(x)`.
fn glp_route_normalization(idx: LtpIndices) -> RadicalScaled {
    let q_fact = RBig::from(factorial_u(idx.q() as u64));
    RadicalScaled::sqrt_of(&(norm_sq(idx) / (&q_fact * &q_fact)))
}

fn alpha_sign(idx: LtpIndices) -> RBig {
    if idx.alpha().rem_euclid(2) == 0 {
        RBig::ONE
    } else {
        RBig::NEG_ONE
    }
}

/// `(−1)^α [bracket] x^l L_q^p(x)`, built by expanding the nonstandard GLP.
/// Agrees with [`ltp_poly`] coefficient by coefficient.
pub fn ltp_via_glp(idx: LtpIndices) -> ExactPolynomial {
    let g = GlpIndices::new(idx.q(), idx.p()).expect("q >= p for valid indices");
    let glp = glp_nonstandard(g).shift(idx.l() as i64).scale(&alpha_sign(idx));
    ExactPolynomial::new(glp.offset(), glp.coeffs().to_vec(), glp_route_normalization(idx))
}

/// Standard-convention form `(−1)^α q! N^α_{nl} x^l L^{(p)}_{q−p}(x)` with
/// `N^α_{nl} = (−1)^α √[(q−p)! / ((2n)^α (q!)³)]`.
///
/// The sign in `N^α_{nl}` is what makes this equal to [`ltp_poly`]: the
/// nonstandard GLP carries `(−1)^p = (−1)^α` relative to the standard one.
pub fn ltp_standard_convention(idx: LtpIndices) -> ExactPolynomial {
    let q_fact = RBig::from(factorial_u(idx.q() as u64));
    let n_sign = alpha_sign(idx);
    let standard = glp_standard(idx.q() - idx.p(), idx.p())
        .shift(idx.l() as i64)
        .scale(&(alpha_sign(idx) * n_sign * q_fact));
    ExactPolynomial::new(
        standard.offset(),
        standard.coeffs().to_vec(),
        glp_route_normalization(idx),
    )
}

/// Weighted partner in the standard convention.
pub fn ltp_standard_weighted(idx: LtpIndices) -> ExactPolynomial {
    ltp_standard_convention(idx)
        .scale(&two_n_pow_alpha(idx))
        .shift(-(idx.alpha() as i64))
}
