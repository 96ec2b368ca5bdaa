//! Exact Laurent polynomials with a shared square-root factor.

use std::fmt;

use dashu::rational::RBig;

use crate::error::{Error, Result};
use crate::numerics::{factorial_u, radical_mul, HighPrecReal, PrecisionContext, RadicalScaled};

/// `√m · Σ_i coeffs[i] x^(offset+i)` with rational coefficients.
///
/// Canonical form: the shared factor is `√m` with `m` square-free (any
/// rational part is folded into the coefficients), the first and last stored
/// coefficients are nonzero, and the zero polynomial has no coefficients.
/// Derived equality is therefore exact polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolynomial {
    offset: i64,
    coeffs: Vec<RBig>,
    radical: RadicalScaled,
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        Self {
            offset: 0,
            coeffs: Vec::new(),
            radical: RadicalScaled::from_rational(RBig::ONE),
        }
    }

    pub fn new(offset: i64, coeffs: Vec<RBig>, radical: RadicalScaled) -> Self {
        if radical.is_zero() {
            return Self::zero();
        }
        let fold = radical.rational().clone();
        let unit = RadicalScaled::new(RBig::ONE, &RBig::from(radical.radicand().clone()));
        let coeffs = coeffs.into_iter().map(|c| c * &fold).collect();
        Self {
            offset,
            coeffs,
            radical: unit,
        }
        .trimmed()
    }

    pub fn from_rational(offset: i64, coeffs: Vec<RBig>) -> Self {
        Self::new(offset, coeffs, RadicalScaled::from_rational(RBig::ONE))
    }

    pub fn from_integers(offset: i64, coeffs: &[i64]) -> Self {
        Self::from_rational(offset, coeffs.iter().map(|&c| RBig::from(c)).collect())
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| *c == RBig::ZERO) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|c| **c == RBig::ZERO).count();
        if leading_zeros == self.coeffs.len() {
            return Self::zero();
        }
        self.coeffs.drain(..leading_zeros);
        self.offset += leading_zeros as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest power present (0 for the zero polynomial).
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Highest power present, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[RBig] {
        &self.coeffs
    }

    pub fn radical(&self) -> &RadicalScaled {
        &self.radical
    }

    /// Coefficient of `x^power` relative to the shared radical.
    pub fn rational_coeff(&self, power: i64) -> RBig {
        let i = power - self.offset;
        if i < 0 || i as usize >= self.coeffs.len() {
            RBig::ZERO
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Full coefficient of `x^power`, radical included.
    pub fn coeff(&self, power: i64) -> RadicalScaled {
        self.radical.scale(&self.rational_coeff(power))
    }

    pub fn scale(&self, factor: &RBig) -> Self {
        Self::new(
            self.offset,
            self.coeffs.iter().map(|c| c * factor).collect(),
            self.radical.clone(),
        )
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            offset: self.offset + k,
            ..self.clone()
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * RBig::from(self.offset + i as i64))
            .collect();
        Self::new(self.offset - 1, coeffs, self.radical.clone())
    }

    pub fn nth_derivative(&self, k: u32) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![RBig::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(
            self.offset + other.offset,
            coeffs,
            radical_mul(&self.radical, &other.radical),
        )
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.radical != other.radical {
            return Err(Error::IncommensurableRadicals);
        }
        let low = self.offset.min(other.offset);
        let high = self.degree().max(other.degree()).unwrap_or(low);
        let coeffs = (low..=high)
            .map(|k| self.rational_coeff(k) + other.rational_coeff(k))
            .collect();
        Ok(Self::new(low, coeffs, self.radical.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&RBig::NEG_ONE))
    }

    /// `∫₀^∞ e^{-x} x^extra_power p(x) dx`, exactly, via `∫ e^{-x} x^m dx = m!`.
    pub fn laguerre_moment(&self, extra_power: i64) -> Result<RadicalScaled> {
        if self.is_zero() {
            return Ok(RadicalScaled::zero());
        }
        let lowest = self.offset + extra_power;
        if lowest < 0 {
            return Err(Error::NotIntegrable { power: lowest });
        }
        let total = self.coeffs.iter().enumerate().fold(RBig::ZERO, |acc, (i, c)| {
            acc + c * RBig::from(factorial_u((lowest + i as i64) as u64))
        });
        Ok(self.radical.scale(&total))
    }

    /// Rational part `Σ c_i x^(offset+i)` at an exact rational point.
    fn rational_value_at(&self, x: &RBig) -> Result<RBig> {
        if self.is_zero() {
            return Ok(RBig::ZERO);
        }
        if *x == RBig::ZERO {
            return match self.offset {
                o if o < 0 => Err(Error::PoleAtOrigin(o)),
                0 => Ok(self.coeffs[0].clone()),
                _ => Ok(RBig::ZERO),
            };
        }
        let horner = self.coeffs.iter().rev().fold(RBig::ZERO, |acc, c| acc * x + c);
        Ok(horner * crate::numerics::pow_rational(x, self.offset))
    }

    /// Exact value at a rational point.
    pub fn eval_exact(&self, x: &RBig) -> Result<RadicalScaled> {
        Ok(self.radical.scale(&self.rational_value_at(x)?))
    }

    /// Value at `x`, correctly rounded except for the final radical multiply.
    ///
    /// `x` is a binary float and hence an exact dyadic rational, so the
    /// Horner pass runs in exact arithmetic and only the result is rounded.
    pub fn eval(&self, x: &HighPrecReal, ctx: &PrecisionContext) -> Result<HighPrecReal> {
        let exact = self.eval_exact(&x.to_rational())?;
        Ok(exact.to_real(ctx))
    }
}

/// Free-function form of [`ExactPolynomial::eval`].
pub fn eval_poly(poly: &ExactPolynomial, x: &HighPrecReal, ctx: &PrecisionContext) -> Result<HighPrecReal> {
    poly.eval(x, ctx)
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if !self.radical.is_rational() {
            write!(f, "sqrt({}) * ", self.radical.radicand())?;
        }
        f.write_str("(")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == RBig::ZERO {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*x^{}", self.offset + i as i64)?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
/// `c x^k` as an exact integer monomial.
pub(crate) fn monomial(coeff: i64, power: i64) -> ExactPolynomial {
    ExactPolynomial::from_rational(power, vec![RBig::from(coeff)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational;

    #[test]
    fn trimming_and_degree() {
        let p = ExactPolynomial::from_integers(0, &[0, 0, 3, -1, 0]);
        assert_eq!(p.offset(), 2);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(ExactPolynomial::from_integers(3, &[0, 0]), ExactPolynomial::zero());
        assert_eq!(ExactPolynomial::zero().degree(), None);
    }

    #[test]
    fn radical_is_folded() {
        // (3 - x)/√6 built from rational part 1/6 and radicand 6
        let a = ExactPolynomial::new(
            0,
            vec![rational(3, 1), rational(-1, 1)],
            RadicalScaled::sqrt_of(&rational(1, 6)),
        );
        let b = ExactPolynomial::new(
            0,
            vec![rational(1, 2), rational(-1, 6)],
            RadicalScaled::sqrt_of(&rational(6, 1)),
        );
        assert_eq!(a, b);
        assert_eq!(a.radical().rational(), &RBig::ONE);
    }

    #[test]
    fn product_of_conjugate_radicals_is_rational() {
        let a = ExactPolynomial::new(0, vec![RBig::ONE], RadicalScaled::sqrt_of(&rational(1, 2)));
        let sq = a.mul(&a);
        assert!(sq.radical().is_rational());
        assert_eq!(sq, ExactPolynomial::from_rational(0, vec![rational(1, 2)]));
    }

    #[test]
    fn derivative_and_shift() {
        let p = ExactPolynomial::from_integers(0, &[18, -6]);
        assert_eq!(p.derivative(), monomial(-6, 0));
        assert_eq!(p.nth_derivative(2), ExactPolynomial::zero());
        let laurent = monomial(2, -1);
        assert_eq!(laurent.derivative(), monomial(-2, -2));
        assert_eq!(p.shift(-2).offset(), -2);
    }

    #[test]
    fn moments() {
        // ∫ e^{-x} x² (3 - x) dx = 3·2! − 3! = 0
        let p = ExactPolynomial::from_integers(0, &[3, -1]);
        assert!(p.laguerre_moment(2).unwrap().is_zero());
        assert_eq!(
            monomial(1, -2).laguerre_moment(2).unwrap().as_rational(),
            Some(&RBig::ONE)
        );
        assert!(matches!(
            monomial(1, -3).laguerre_moment(2),
            Err(Error::NotIntegrable { power: -1 })
        ));
    }

    #[test]
    fn addition_rules() {
        let a = ExactPolynomial::from_integers(0, &[1, 2]);
        let b = ExactPolynomial::from_integers(1, &[-2, 5]);
        assert_eq!(a.try_add(&b).unwrap(), ExactPolynomial::from_integers(0, &[1, 0, 5]));
        assert_eq!(a.try_sub(&a).unwrap(), ExactPolynomial::zero());
        let root2 = ExactPolynomial::new(0, vec![RBig::ONE], RadicalScaled::sqrt_of(&rational(2, 1)));
        assert_eq!(a.try_add(&root2), Err(Error::IncommensurableRadicals));
        assert_eq!(ExactPolynomial::zero().try_add(&root2).unwrap(), root2);
    }

    #[test]
    fn evaluation() {
        let ctx = PrecisionContext::default();
        let p = ExactPolynomial::new(
            0,
            vec![rational(3, 1), rational(-1, 1)],
            RadicalScaled::sqrt_of(&rational(1, 6)),
        );
        assert!(p.eval(&ctx.int(3), &ctx).unwrap().is_zero());
        let c = ExactPolynomial::new(0, vec![RBig::ONE], RadicalScaled::sqrt_of(&rational(1, 2)));
        let v = c.eval(&ctx.parse("17.25").unwrap(), &ctx).unwrap();
        assert!((v.to_f64() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-16);
        let l10 = ExactPolynomial::from_integers(0, &[1, -1]);
        assert!(eval_poly(&l10, &ctx.one(), &ctx).unwrap().is_zero());
        assert_eq!(monomial(1, -1).eval(&ctx.zero(), &ctx), Err(Error::PoleAtOrigin(-1)));
    }
}
