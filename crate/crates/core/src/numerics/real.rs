//! Configurable-precision binary floating point.
//!
//! [`HighPrecReal`] is a thin wrapper around a round-half-even binary `FBig`.
//! Every value remembers the precision it was produced at; mixed-precision
//! arithmetic rounds to the larger of the two. Callers that need a result at
//! a specific precision go through [`PrecisionContext`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu::base::{Abs, BitTest, Sign, UnsignedAbs};
use dashu::float::round::mode::HalfEven;
use dashu::float::{Context, FBig};
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use crate::error::{Error, Result};
use crate::numerics::parse_decimal;

pub(crate) type Float = FBig<HalfEven, 2>;

/// Number of mantissa bits used for a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    mantissa_bits: usize,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            mantissa_bits: Self::DEFAULT_BITS,
        }
    }
}

impl PrecisionContext {
    pub const DEFAULT_BITS: usize = 256;
    pub const MIN_BITS: usize = 64;

    pub fn new(mantissa_bits: usize) -> Result<Self> {
        if mantissa_bits < Self::MIN_BITS {
            return Err(Error::PrecisionTooLow(mantissa_bits));
        }
        Ok(Self { mantissa_bits })
    }

    pub fn bits(&self) -> usize {
        self.mantissa_bits
    }

    /// A context with `extra` guard bits on top of this one.
    pub fn with_guard(&self, extra: usize) -> Self {
        Self {
            mantissa_bits: self.mantissa_bits + extra,
        }
    }

    /// Working precision used internally before the final rounding.
    pub(crate) fn working(&self) -> Self {
        self.with_guard(64)
    }

    /// Correctly rounded conversion of an exact rational.
    ///
    /// The quotient is taken with two bits beyond the target precision plus a
    /// sticky bit for any nonzero remainder, so the final half-even rounding
    /// sees the true position of the value relative to ties.
    pub fn rational(&self, value: &RBig) -> HighPrecReal {
        let (num, den) = value.clone().into_parts();
        if num.is_zero() {
            return self.zero();
        }
        let negative = num < IBig::ZERO;
        let num = num.unsigned_abs();
        let shift = (self.mantissa_bits + 2 + den.bit_len()) as isize - num.bit_len() as isize;
        let (n, d) = if shift >= 0 {
            (num << shift as usize, den)
        } else {
            (num, den << (-shift) as usize)
        };
        let (quotient, remainder) = (&n / &d, &n % &d);
        let sticky = if remainder.is_zero() { UBig::ZERO } else { UBig::ONE };
        let significand = IBig::from((quotient << 1) | sticky);
        let significand = if negative { -significand } else { significand };
        HighPrecReal(round_parts(significand, -shift - 1, self.mantissa_bits))
    }

    pub fn int(&self, value: impl Into<IBig>) -> HighPrecReal {
        let value: IBig = value.into();
        HighPrecReal(round_parts(value, 0, self.mantissa_bits))
    }

    pub fn zero(&self) -> HighPrecReal {
        self.int(0)
    }

    pub fn one(&self) -> HighPrecReal {
        self.int(1)
    }

    /// Exact conversion of a finite `f64`, then rounding to this precision.
    pub fn from_f64(&self, value: f64) -> HighPrecReal {
        let exact = Float::try_from(value).expect("finite f64");
        HighPrecReal(exact).round_to(self)
    }

    /// Parses a decimal string exactly, then rounds once.
    pub fn parse(&self, text: &str) -> Result<HighPrecReal> {
        Ok(self.rational(&parse_decimal(text)?))
    }

    /// Decimal digits needed so that a value at this precision survives a
    /// decimal round trip bit-exactly.
    pub fn round_trip_digits(&self) -> usize {
        (self.mantissa_bits as f64 * std::f64::consts::LOG10_2).ceil() as usize + 1
    }
}

#[derive(Clone, Debug)]
pub struct HighPrecReal(pub(crate) Float);

impl HighPrecReal {
    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    /// Rounds half-even to `ctx`. Also trims significands that carry more
    /// bits than their nominal precision, which some backend operations leave.
    pub fn round_to(&self, ctx: &PrecisionContext) -> HighPrecReal {
        let (significand, exponent) = self.0.repr().clone().into_parts();
        HighPrecReal(round_parts(significand, exponent, ctx.bits()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.repr().is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.repr().sign() == Sign::Negative && !self.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_negative() && !self.is_zero()
    }

    pub fn abs(&self) -> HighPrecReal {
        HighPrecReal(self.0.clone().abs())
    }

    fn ctx(&self) -> Context<HalfEven> {
        Context::new(self.precision())
    }

    pub fn exp(&self) -> HighPrecReal {
        HighPrecReal(self.0.exp())
    }

    /// Natural logarithm; the argument must be positive.
    pub fn ln(&self) -> HighPrecReal {
        HighPrecReal(self.0.ln())
    }

    pub fn sqrt(&self) -> HighPrecReal {
        HighPrecReal(self.ctx().sqrt(self.0.repr()).value())
    }

    /// `self^exponent` for a positive base.
    pub fn powf(&self, exponent: &HighPrecReal) -> HighPrecReal {
        if exponent.is_zero() {
            return HighPrecReal(self.ctx().convert_int::<2>(IBig::ONE).value());
        }
        let prec = self.precision().max(exponent.precision());
        let ctx = Context::<HalfEven>::new(prec);
        let log = ctx.ln(self.0.repr()).value();
        let scaled = ctx.mul(log.repr(), exponent.0.repr()).value();
        HighPrecReal(ctx.exp(scaled.repr()).value())
    }

    pub fn powi(&self, exponent: i64) -> HighPrecReal {
        let ctx = self.ctx();
        if exponent >= 0 {
            HighPrecReal(ctx.powi(self.0.repr(), IBig::from(exponent)).value())
        } else {
            let pos = ctx.powi(self.0.repr(), IBig::from(-exponent)).value();
            HighPrecReal(ctx.inv(pos.repr()).value())
        }
    }

    pub fn recip(&self) -> HighPrecReal {
        HighPrecReal(self.ctx().inv(self.0.repr()).value())
    }

    pub fn floor_int(&self) -> IBig {
        self.0.floor().to_int().value()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// The exact dyadic rational this value represents.
    pub fn to_rational(&self) -> RBig {
        let (significand, exponent) = self.0.repr().clone().into_parts();
        if exponent >= 0 {
            RBig::from(significand << exponent as usize)
        } else {
            RBig::from_parts(significand, UBig::ONE << (-exponent) as usize)
        }
    }

    /// Position of the leading bit: `|self|` lies in `[2^e, 2^(e+1))`.
    fn leading_exponent(&self) -> Option<isize> {
        let repr = self.0.repr();
        if repr.is_zero() {
            return None;
        }
        let bits = repr.significand().unsigned_abs().bit_len() as isize;
        Some(repr.exponent() + bits - 1)
    }

    /// Unit in the last place of `self` at `bits` of precision, as an exact rational.
    pub fn ulp(&self, bits: usize) -> RBig {
        match self.leading_exponent() {
            None => RBig::ZERO,
            Some(e) => pow2(e - bits as isize + 1),
        }
    }

    /// Distance between two values in units of the last place of the larger
    /// magnitude, at `bits` of precision.
    pub fn ulps_between(&self, other: &HighPrecReal, bits: usize) -> f64 {
        let diff = (self.to_rational() - other.to_rational()).abs();
        if diff == RBig::ZERO {
            return 0.0;
        }
        let bigger = if self.abs() >= other.abs() { self } else { other };
        let ulp = bigger.ulp(bits);
        if ulp == RBig::ZERO {
            return f64::INFINITY;
        }
        (diff / ulp).to_f64().value()
    }

    /// Scientific notation with exactly `digits` significant digits,
    /// correctly rounded (half-even) from the exact binary value.
    pub fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0e0".to_string();
        }
        let value = self.to_rational().abs();
        let lead = self.leading_exponent().unwrap_or(0);
        // floor(log10|v|) is one of these two candidates.
        let mut exp10 = ((lead as f64) * std::f64::consts::LOG10_2).floor() as i64;
        let scaled = loop {
            let shift = digits as i64 - 1 - exp10;
            let scaled = round_half_even(&(&value * pow10(shift)));
            let upper = UBig::from(10u8).pow(digits);
            let lower = UBig::from(10u8).pow(digits - 1);
            if scaled >= upper {
                exp10 += 1;
            } else if scaled < lower {
                exp10 -= 1;
            } else {
                break scaled;
            }
        };
        let text = scaled.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        if digits == 1 {
            format!("{sign}{text}e{exp10}")
        } else {
            format!("{sign}{}.{}e{exp10}", &text[..1], &text[1..])
        }
    }
}

fn pow2(e: isize) -> RBig {
    if e >= 0 {
        RBig::from(UBig::ONE << e as usize)
    } else {
        RBig::from_parts(IBig::ONE, UBig::ONE << (-e) as usize)
    }
}

fn pow10(e: i64) -> RBig {
    let ten = UBig::from(10u8);
    if e >= 0 {
        RBig::from(ten.pow(e as usize))
    } else {
        RBig::from_parts(IBig::ONE, ten.pow((-e) as usize))
    }
}

fn round_half_even(value: &RBig) -> UBig {
    let floor = value.floor();
    let frac = value - RBig::from(floor.clone());
    let half = RBig::from_parts(IBig::ONE, UBig::from(2u8));
    let up = match frac.cmp(&half) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => (&floor & IBig::ONE) == IBig::ONE,
    };
    let rounded = if up { floor + IBig::ONE } else { floor };
    rounded.unsigned_abs()
}

/// `significand · 2^exponent` rounded half-even to `bits` significant bits.
fn round_parts(significand: IBig, exponent: isize, bits: usize) -> Float {
    let context = Context::<HalfEven>::new(bits);
    if significand.is_zero() {
        return Float::from_repr(dashu::float::Repr::new(IBig::ZERO, 0), context);
    }
    let negative = significand < IBig::ZERO;
    let magnitude = significand.unsigned_abs();
    let excess = magnitude.bit_len().saturating_sub(bits);
    let (mut kept, exponent) = if excess == 0 {
        (magnitude, exponent)
    } else {
        let kept = &magnitude >> excess;
        let dropped = &magnitude - (&kept << excess);
        let half = UBig::ONE << (excess - 1);
        let round_up = dropped > half || (dropped == half && kept.bit(0));
        (
            if round_up { kept + UBig::ONE } else { kept },
            exponent + excess as isize,
        )
    };
    let mut exponent = exponent;
    if kept.bit_len() > bits {
        kept >>= 1;
        exponent += 1;
    }
    let kept = IBig::from(kept);
    let signed = if negative { -kept } else { kept };
    Float::from_repr(dashu::float::Repr::new(signed, exponent), context)
}

/// `(significand, exponent)` with trailing zero bits moved into the exponent.
fn normalized_parts(value: &Float) -> (IBig, isize) {
    let (significand, exponent) = value.repr().clone().into_parts();
    match significand.trailing_zeros() {
        None => (IBig::ZERO, 0),
        Some(tz) => (significand >> tz, exponent + tz as isize),
    }
}

// Values compare by magnitude; the same number may be stored with different
// significand/exponent splits.
impl PartialEq for HighPrecReal {
    fn eq(&self, other: &Self) -> bool {
        normalized_parts(&self.0) == normalized_parts(&other.0)
    }
}

impl PartialOrd for HighPrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.0.cmp(&other.0))
    }
}

impl fmt::Display for HighPrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| {
            PrecisionContext::new(self.precision().max(64))
                .unwrap()
                .round_trip_digits()
        });
        f.write_str(&self.to_sci_string(digits))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&HighPrecReal> for &HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: &HighPrecReal) -> HighPrecReal {
                HighPrecReal((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<HighPrecReal> for HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: HighPrecReal) -> HighPrecReal {
                HighPrecReal(self.0.$method(rhs.0))
            }
        }
        impl $trait<&HighPrecReal> for HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: &HighPrecReal) -> HighPrecReal {
                HighPrecReal(self.0.$method(&rhs.0))
            }
        }
        impl $trait<HighPrecReal> for &HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: HighPrecReal) -> HighPrecReal {
                HighPrecReal((&self.0).$method(rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for HighPrecReal {
    type Output = HighPrecReal;
    fn neg(self) -> HighPrecReal {
        HighPrecReal(-self.0)
    }
}

impl Neg for &HighPrecReal {
    type Output = HighPrecReal;
    fn neg(self) -> HighPrecReal {
        HighPrecReal(-self.0.clone())
    }
}
