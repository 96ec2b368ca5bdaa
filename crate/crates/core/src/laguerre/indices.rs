use std::fmt;

use crate::error::{Error, Result};

/// Quantum numbers `(α, n, l)` of an L^α Laguerre-type polynomial.
///
/// `α ≤ 2` is the frictional quantum number, `n ≥ 1` the principal and
/// `0 ≤ l ≤ n−1` the orbital quantum number. The associated Laguerre indices
/// are `p = 2l + 2 − α` and `q = n + l + 1 − α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LtpIndices {
    alpha: i32,
    n: u32,
    l: u32,
}

impl LtpIndices {
    pub const MAX_ALPHA: i32 = 2;

    pub fn new(alpha: i32, n: u32, l: u32) -> Result<Self> {
        if alpha > Self::MAX_ALPHA {
            return Err(Error::InvalidIndices(format!("alpha = {alpha} exceeds 2")));
        }
        if n == 0 {
            return Err(Error::InvalidIndices("n must be positive".into()));
        }
        if l >= n {
            return Err(Error::InvalidIndices(format!("l = {l} must be below n = {n}")));
        }
        Ok(Self { alpha, n, l })
    }

    pub fn alpha(&self) -> i32 {
        self.alpha
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn p(&self) -> u32 {
        (2 * self.l as i64 + 2 - self.alpha as i64) as u32
    }

    pub fn q(&self) -> u32 {
        (self.n as i64 + self.l as i64 + 1 - self.alpha as i64) as u32
    }

    /// Same `α, l` with a different principal quantum number.
    pub fn with_n(&self, n: u32) -> Result<Self> {
        Self::new(self.alpha, n, self.l)
    }
}

impl fmt::Display for LtpIndices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(alpha={}, n={}, l={})", self.alpha, self.n, self.l)
    }
}

/// Indices `(μ, ν)` of the nonstandard generalized Laguerre polynomial `L_μ^ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlpIndices {
    mu: u32,
    nu: u32,
}

impl GlpIndices {
    pub fn new(mu: u32, nu: u32) -> Result<Self> {
        if mu < nu {
            return Err(Error::InvalidIndices(format!("mu = {mu} below nu = {nu}")));
        }
        Ok(Self { mu, nu })
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }
}

impl fmt::Display for GlpIndices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(mu={}, nu={})", self.mu, self.nu)
    }
}
