//! Numbers of the form `r · √m` with `r` rational and `m` a positive integer.
//!
//! The canonical form keeps `m` square-free: a rational radicand `a/b` is
//! first rewritten as `√(ab)/b`, then square factors are stripped by trial
//! division over small primes followed by a perfect-square test on the
//! cofactor. For the factorial-built radicands in this crate every prime
//! factor is tiny, so the reduction is complete and equal values compare equal.

use std::fmt;
use std::ops::{Mul, Neg};
use std::sync::OnceLock;

use dashu::base::{Gcd, SquareRootRem, UnsignedAbs};
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use super::real::{HighPrecReal, PrecisionContext};

const TRIAL_PRIME_BOUND: u32 = 4096;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_PRIME_BOUND as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                (i * i..=n).step_by(i).for_each(|j| sieve[j] = false);
            }
            i += 1;
        }
        (2..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

/// Splits `n` into `(s, m)` with `n = s² m`.
fn extract_square(n: &UBig) -> (UBig, UBig) {
    let mut rest = n.clone();
    let mut root = UBig::ONE;
    for &p in small_primes() {
        let p = UBig::from(p);
        let p2 = &p * &p;
        if p2 > rest {
            break;
        }
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            root *= &p;
        }
    }
    let (s, r) = rest.sqrt_rem();
    if r.is_zero() {
        root *= &s;
        rest = UBig::ONE;
    }
    (root, rest)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalScaled {
    rational: RBig,
    radicand: UBig,
}

impl RadicalScaled {
    pub fn zero() -> Self {
        Self {
            rational: RBig::ZERO,
            radicand: UBig::ONE,
        }
    }

    pub fn from_rational(rational: RBig) -> Self {
        Self {
            rational,
            radicand: UBig::ONE,
        }
    }

    /// `rational · √radicand`, canonicalized. Panics on a negative radicand.
    pub fn new(rational: RBig, radicand: &RBig) -> Self {
        assert!(*radicand >= RBig::ZERO, "negative radicand");
        if rational == RBig::ZERO || *radicand == RBig::ZERO {
            return Self::zero();
        }
        let (num, den) = radicand.clone().into_parts();
        let num = num.unsigned_abs();
        // √(a/b) = √(ab) / b
        let (root, rest) = extract_square(&(num * &den));
        let scale = RBig::from_parts(IBig::from(root), den);
        Self {
            rational: rational * scale,
            radicand: rest,
        }
    }

    /// `√value` for a nonnegative rational.
    pub fn sqrt_of(value: &RBig) -> Self {
        Self::new(RBig::ONE, value)
    }

    pub fn rational(&self) -> &RBig {
        &self.rational
    }

    pub fn radicand(&self) -> &UBig {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational == RBig::ZERO
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == UBig::ONE
    }

    pub fn as_rational(&self) -> Option<&RBig> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn scale(&self, factor: &RBig) -> Self {
        if *factor == RBig::ZERO {
            return Self::zero();
        }
        Self {
            rational: &self.rational * factor,
            radicand: self.radicand.clone(),
        }
    }

    /// Exact sum when both terms share a radicand (or one is zero).
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        if self.radicand != other.radicand {
            return None;
        }
        let sum = &self.rational + &other.rational;
        if sum == RBig::ZERO {
            return Some(Self::zero());
        }
        Some(Self {
            rational: sum,
            radicand: self.radicand.clone(),
        })
    }

    pub fn to_real(&self, ctx: &PrecisionContext) -> HighPrecReal {
        let wp = ctx.working();
        if self.is_rational() {
            return ctx.rational(&self.rational);
        }
        let root = wp.int(IBig::from(self.radicand.clone())).sqrt();
        (wp.rational(&self.rational) * root).round_to(ctx)
    }
}

/// Exact product. Both radicands are square-free, so with `g = gcd(m, m')`
/// the product radicand reduces to `(m/g)(m'/g)` without any factoring.
pub fn radical_mul(a: &RadicalScaled, b: &RadicalScaled) -> RadicalScaled {
    if a.is_zero() || b.is_zero() {
        return RadicalScaled::zero();
    }
    let g = (&a.radicand).gcd(&b.radicand);
    let rest = (&a.radicand / &g) * (&b.radicand / &g);
    RadicalScaled {
        rational: &a.rational * &b.rational * RBig::from(g),
        radicand: rest,
    }
}

impl Mul<&RadicalScaled> for &RadicalScaled {
    type Output = RadicalScaled;
    fn mul(self, rhs: &RadicalScaled) -> RadicalScaled {
        radical_mul(self, rhs)
    }
}

impl Neg for RadicalScaled {
    type Output = RadicalScaled;
    fn neg(self) -> RadicalScaled {
        RadicalScaled {
            rational: -self.rational,
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for RadicalScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "{}*sqrt({})", self.rational, self.radicand)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational;
    use proptest::prelude::*;

    #[test]
    fn sqrt_two_squared() {
        let a = RadicalScaled::new(RBig::ONE, &rational(2, 1));
        let p = radical_mul(&a, &a);
        assert_eq!(p, RadicalScaled::from_rational(rational(2, 1)));
    }

    #[test]
    fn inverse_sqrt_six_product() {
        // (3/√6)(−1/√6) = −1/2
        let a = RadicalScaled::new(rational(3, 1), &rational(1, 6));
        let b = RadicalScaled::new(rational(-1, 1), &rational(1, 6));
        let p = radical_mul(&a, &b);
        assert_eq!(p.as_rational(), Some(&rational(-1, 2)));
    }

    #[test]
    fn rational_closure() {
        let a = RadicalScaled::from_rational(rational(2, 3));
        let b = RadicalScaled::from_rational(rational(-9, 4));
        assert_eq!(radical_mul(&a, &b), RadicalScaled::from_rational(rational(-3, 2)));
    }

    #[test]
    fn canonical_form_extracts_squares() {
        let a = RadicalScaled::sqrt_of(&rational(72, 1));
        assert_eq!(a.rational(), &rational(6, 1));
        assert_eq!(a.radicand(), &UBig::from(2u8));
        let b = RadicalScaled::sqrt_of(&rational(1, 8));
        assert_eq!(b.rational(), &rational(1, 4));
        assert_eq!(b.radicand(), &UBig::from(2u8));
        // large prime squared falls to the perfect-square test
        let big = RadicalScaled::sqrt_of(&rational(7919 * 7919 * 4, 1));
        assert_eq!(big.rational(), &rational(2 * 7919, 1));
        assert_eq!(big.radicand(), &UBig::ONE);
    }

    #[test]
    fn addition_requires_common_radicand() {
        let a = RadicalScaled::sqrt_of(&rational(2, 1));
        let b = RadicalScaled::sqrt_of(&rational(3, 1));
        assert!(a.checked_add(&b).is_none());
        assert_eq!(a.checked_add(&(-a.clone())), Some(RadicalScaled::zero()));
        assert_eq!(RadicalScaled::zero().checked_add(&b), Some(b.clone()));
    }

    proptest! {
        #[test]
        fn equal_values_have_equal_forms(s in 1u64..500, m in 1u64..2000, d in 1u64..500) {
            // √(s² m / d²) written two ways
            let direct = RadicalScaled::new(rational(s as i64, d), &rational(m as i64, 1));
            let folded = RadicalScaled::sqrt_of(&rational((s * s * m) as i64, d * d));
            prop_assert_eq!(direct, folded);
        }
    }
}
