use dashu::rational::RBig;

use crate::error::Result;
use crate::laguerre::{ltp_poly, ltp_standard_convention, ltp_standard_weighted, ltp_weighted_poly, LtpIndices};
use crate::numerics::RadicalScaled;

/// Exact value of `∫₀^∞ e^{−x} x² f g dx` next to the Kronecker delta it should equal.
#[derive(Clone, Debug, PartialEq)]
pub struct InnerProductResult {
    pub n: u32,
    pub n_prime: u32,
    pub value: RadicalScaled,
    pub expected: u8,
}

impl InnerProductResult {
    fn new(n: u32, n_prime: u32, value: RadicalScaled) -> Self {
        Self {
            n,
            n_prime,
            value,
            expected: u8::from(n == n_prime),
        }
    }

    /// True when the value is exactly the Kronecker delta.
    pub fn holds(&self) -> bool {
        self.value == RadicalScaled::from_rational(RBig::from(self.expected))
    }
}

fn pair(alpha: i32, l: u32, n: u32, n_prime: u32) -> Result<(LtpIndices, LtpIndices)> {
    Ok((LtpIndices::new(alpha, n, l)?, LtpIndices::new(alpha, n_prime, l)?))
}

/// `∫₀^∞ e^{−x} x² 𝓛^α_{nl} 𝓛̄^α_{n'l} dx`, with the weight on the second factor.
pub fn weighted_inner(alpha: i32, l: u32, n: u32, n_prime: u32) -> Result<InnerProductResult> {
    let (a, b) = pair(alpha, l, n, n_prime)?;
    let product = ltp_poly(a).mul(&ltp_weighted_poly(b));
    Ok(InnerProductResult::new(n, n_prime, product.laguerre_moment(2)?))
}

/// As [`weighted_inner`] with the weight moved to the first factor.
pub fn weighted_inner_first(alpha: i32, l: u32, n: u32, n_prime: u32) -> Result<InnerProductResult> {
    let (a, b) = pair(alpha, l, n, n_prime)?;
    let product = ltp_weighted_poly(a).mul(&ltp_poly(b));
    Ok(InnerProductResult::new(n, n_prime, product.laguerre_moment(2)?))
}

/// As [`weighted_inner`] for the polynomials built in the standard convention.
pub fn weighted_inner_standard(alpha: i32, l: u32, n: u32, n_prime: u32) -> Result<InnerProductResult> {
    let (a, b) = pair(alpha, l, n, n_prime)?;
    let product = ltp_standard_convention(a).mul(&ltp_standard_weighted(b));
    Ok(InnerProductResult::new(n, n_prime, product.laguerre_moment(2)?))
}

/// `size × size` matrix of [`weighted_inner`] over `n, n' ∈ {l+1, …, l+size}`.
pub fn orthonormality_matrix(alpha: i32, l: u32, size: u32) -> Result<Vec<Vec<InnerProductResult>>> {
    (l + 1..=l + size)
        .map(|n| (l + 1..=l + size).map(|np| weighted_inner(alpha, l, n, np)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let one = RadicalScaled::from_rational(RBig::ONE);
        assert_eq!(weighted_inner(0, 0, 1, 1).unwrap().value, one);
        assert!(weighted_inner(0, 0, 1, 2).unwrap().value.is_zero());
        assert_eq!(weighted_inner(2, 0, 1, 1).unwrap().value, one);
    }

    #[test]
    fn identity_matrix_all_alpha() {
        for alpha in -2..=2 {
            for l in 0..=3 {
                for row in orthonormality_matrix(alpha, l, 10).unwrap() {
                    for entry in row {
                        assert!(
                            entry.holds(),
                            "alpha={alpha} l={l} n={} n'={}: {}",
                            entry.n,
                            entry.n_prime,
                            entry.value
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weight_attachment_is_irrelevant() {
        for alpha in -2..=2 {
            for l in 0..=2 {
                for n in l + 1..=l + 6 {
                    for np in l + 1..=l + 6 {
                        let second = weighted_inner(alpha, l, n, np).unwrap();
                        let first = weighted_inner_first(alpha, l, n, np).unwrap();
                        assert_eq!(first, second);
                        assert!(weighted_inner_standard(alpha, l, n, np).unwrap().holds());
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_is_rational() {
        for alpha in -2..=2 {
            for n in 1..=8 {
                let v = weighted_inner(alpha, 0, n, n).unwrap().value;
                assert!(v.is_rational());
            }
        }
    }
}
