//! Exact and high-precision arithmetic substrate.
//!
//! Exact values use `dashu` big integers and rationals; transcendental work
//! goes through [`HighPrecReal`] at an explicitly passed [`PrecisionContext`].

mod gamma;
pub mod quadrature;
mod radical;
mod real;

pub use dashu::integer::{IBig as BigInt, UBig as BigUint};
pub use dashu::rational::RBig as BigRational;

pub use gamma::{gamma, gamma_rational};
pub use radical::{radical_mul, RadicalScaled};
pub use real::{HighPrecReal, PrecisionContext};

use crate::error::{Error, Result};

/// `n!` as an exact integer.
pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok(factorial_u(n as u64))
}

pub(crate) fn factorial_u(n: u64) -> BigInt {
    (2..=n).fold(BigInt::ONE, |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub(crate) fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::ONE;
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::ONE;
    let mut term = a.clone();
    for _ in 0..k {
        acc = &acc * &term;
        term += BigRational::ONE;
    }
    acc
}

#[cfg(test)]
pub(crate) fn rational(num: i64, den: u64) -> BigRational {
    BigRational::from_parts(BigInt::from(num), BigUint::from(den))
}

pub(crate) fn pow_rational(base: &BigRational, exp: i64) -> BigRational {
    let magnitude = exp.unsigned_abs() as usize;
    let (num, den) = base.clone().into_parts();
    let powered = BigRational::from_parts(num.pow(magnitude), den.pow(magnitude));
    if exp >= 0 {
        powered
    } else {
        BigRational::ONE / powered
    }
}

/// Parses a plain or scientific decimal literal (`-3.56`, `5.1e-2`, `.5`)
/// into the exact rational it denotes.
pub fn parse_decimal(text: &str) -> Result<BigRational> {
    let err = || Error::Parse(text.to_string());
    let trimmed = text.trim();
    let (mantissa, exponent) = match trimmed.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = trimmed[pos + 1..].parse().map_err(|_| err())?;
            (&trimmed[..pos], exp)
        }
        None => (trimmed, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let significand: BigInt = all_digits.parse().map_err(|_| err())?;
    let significand = if negative { -significand } else { significand };
    let scale = exponent - frac_part.len() as i64;
    Ok(BigRational::from(significand) * pow_rational(&BigRational::from(BigInt::from(10)), scale))
}
