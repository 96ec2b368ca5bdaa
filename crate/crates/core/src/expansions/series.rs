//! Exact-rational bookkeeping behind the series expansions.
//!
//! Every coefficient `A_μ` (or `B_μ`) is the common transcendental factor
//! `T = Γ(η*+1)/(1+ξ)^{η*+1}` times an exact quantity, and every product
//! `A_μ Π_{μs}` (or `B_μ β_{μs}`) is `T` times an exact rational. Partial sums
//! are therefore accumulated in exact arithmetic and rounded once.

use std::collections::BTreeMap;
use std::fmt;

use dashu::rational::RBig;

use super::ladder::{rational_power, GammaLadder};
use crate::error::{Error, Result};
use crate::laguerre::{beta_coeff, norm_sq, pi_rational, GlpIndices, LtpIndices};
use crate::numerics::{factorial_u, gamma_rational, pow_rational, HighPrecReal, PrecisionContext, RadicalScaled};

/// Expansion basis: `𝓛^α_{μν}` for `μ ≥ ν+1`, or `L_μ^ν` for `μ ≥ ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Ltp { alpha: i32, nu: u32 },
    Glp { nu: u32 },
}

impl Basis {
    pub fn nu(&self) -> u32 {
        match *self {
            Basis::Ltp { nu, .. } | Basis::Glp { nu } => nu,
        }
    }

    pub fn alpha(&self) -> Option<i32> {
        match *self {
            Basis::Ltp { alpha, .. } => Some(alpha),
            Basis::Glp { .. } => None,
        }
    }

    /// Smallest admissible basis index (and truncation order).
    pub fn first_index(&self) -> u32 {
        match *self {
            Basis::Ltp { nu, .. } => nu + 1,
            Basis::Glp { nu } => nu,
        }
    }

    /// Highest power of `r` present in a truncation of order `n`.
    pub fn max_power(&self, n: u32) -> u32 {
        match *self {
            Basis::Ltp { .. } => n.saturating_sub(1),
            Basis::Glp { nu } => n.saturating_sub(nu),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Ltp { alpha, nu } => write!(f, "LTP(alpha={alpha}, nu={nu})"),
            Basis::Glp { nu } => write!(f, "GLP(nu={nu})"),
        }
    }
}

#[derive(Clone, Debug)]
struct Term {
    /// `A_μ / T` or `B_μ / T`.
    coefficient: RadicalScaled,
    /// Rational factor with `A_μ Π_{μs} = T · weight · poly[s − offset]`.
    weight: RBig,
    offset: u32,
    poly: Vec<RBig>,
}

impl Term {
    fn poly_coeff(&self, power: u32) -> Option<&RBig> {
        power.checked_sub(self.offset).and_then(|i| self.poly.get(i as usize))
    }
}

/// Coefficients `A` or `B` keyed by basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionCoeffTable {
    pub basis: Basis,
    pub eta_star: RBig,
    pub xi: RBig,
    pub coefficients: BTreeMap<u32, HighPrecReal>,
    pub precision: PrecisionContext,
}

/// Collected coefficients `Q` or `D` keyed by power of `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct RearrangedCoeffTable {
    pub basis: Basis,
    pub n: u32,
    pub coefficients: BTreeMap<u32, HighPrecReal>,
}

/// Series expansion of `r^{η*} e^{−ξr}` in one basis, grown on demand.
#[derive(Clone, Debug)]
pub struct Expansion {
    basis: Basis,
    eta_star: RBig,
    xi: RBig,
    ladder: GammaLadder,
    terms: Vec<Term>,
}

impl Expansion {
    pub fn new(basis: Basis, eta_star: &RBig, xi: &RBig) -> Result<Self> {
        if *eta_star < RBig::ZERO || *eta_star >= RBig::ONE {
            return Err(Error::InvalidParameter(format!("eta* = {eta_star} outside [0, 1)")));
        }
        if *xi < RBig::ZERO {
            return Err(Error::InvalidParameter(format!("xi = {xi} is negative")));
        }
        if let Basis::Ltp { alpha, .. } = basis {
            if alpha > LtpIndices::MAX_ALPHA {
                return Err(Error::InvalidIndices(format!("alpha = {alpha} exceeds 2")));
            }
        }
        Ok(Self {
            basis,
            eta_star: eta_star.clone(),
            xi: xi.clone(),
            ladder: GammaLadder::new(eta_star, &(xi + RBig::ONE)),
            terms: Vec::new(),
        })
    }

    /// Builds a new expansion already extended to order `n`.
    pub fn up_to(basis: Basis, eta_star: &RBig, xi: &RBig, n: u32) -> Result<Self> {
        let mut expansion = Self::new(basis, eta_star, xi)?;
        expansion.extend_to(n)?;
        Ok(expansion)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn eta_star(&self) -> &RBig {
        &self.eta_star
    }

    pub fn xi(&self) -> &RBig {
        &self.xi
    }

    /// Highest basis index computed so far.
    pub fn order(&self) -> Option<u32> {
        (!self.terms.is_empty()).then(|| self.basis.first_index() + self.terms.len() as u32 - 1)
    }

    pub fn extend_to(&mut self, n: u32) -> Result<()> {
        let first = self.basis.first_index();
        if n < first {
            return Err(Error::InvalidIndices(format!(
                "order {n} below the first index {first} of {}",
                self.basis
            )));
        }
        while self.order().is_none_or(|top| top < n) {
            let mu = first + self.terms.len() as u32;
            let term = match self.basis {
                Basis::Ltp { alpha, nu } => self.ltp_term(alpha, nu, mu)?,
                Basis::Glp { nu } => self.glp_term(nu, mu)?,
            };
            self.terms.push(term);
        }
        Ok(())
    }

    fn ltp_term(&mut self, alpha: i32, nu: u32, mu: u32) -> Result<Term> {
        let idx = LtpIndices::new(alpha, mu, nu)?;
        let poly: Vec<RBig> = (nu..mu).map(|s| pi_rational(idx, s as i64)).collect();
        let mut sum = RBig::ZERO;
        for (s, pi) in (nu..mu).zip(&poly) {
            let step = (s as i64 + 3 - alpha as i64) as u32;
            sum += pi * self.ladder.ratio(step);
        }
        let scale = pow_rational(&RBig::from(2 * mu as i64), alpha as i64) * sum;
        let norm = norm_sq(idx);
        Ok(Term {
            weight: &scale * &norm,
            coefficient: RadicalScaled::new(scale, &norm),
            offset: nu,
            poly,
        })
    }

    fn glp_term(&mut self, nu: u32, mu: u32) -> Result<Term> {
        let g = GlpIndices::new(mu, nu)?;
        let poly: Vec<RBig> = (0..=mu - nu).map(|s| RBig::from(beta_coeff(g, s as i64))).collect();
        let mut sum = RBig::ZERO;
        for (s, beta) in poly.iter().enumerate() {
            sum += beta * self.ladder.ratio(nu + s as u32 + 1);
        }
        let mu_fact = RBig::from(factorial_u(mu as u64));
        let b = sum * RBig::from(factorial_u((mu - nu) as u64)) / (&mu_fact * &mu_fact * &mu_fact);
        Ok(Term {
            coefficient: RadicalScaled::from_rational(b.clone()),
            weight: b,
            offset: 0,
            poly,
        })
    }

    fn term(&self, mu: u32) -> Result<&Term> {
        mu.checked_sub(self.basis.first_index())
            .and_then(|i| self.terms.get(i as usize))
            .ok_or_else(|| Error::InvalidIndices(format!("index {mu} outside the computed range of {}", self.basis)))
    }

    /// `T = Γ(η*+1) / (1+ξ)^{η*+1}`.
    pub fn leading_factor(&self, ctx: &PrecisionContext) -> Result<HighPrecReal> {
        self.ladder.leading(ctx)
    }

    /// `A_μ / T` (LTP) or `B_μ / T` (GLP), exactly.
    pub fn coefficient_exact(&self, mu: u32) -> Result<&RadicalScaled> {
        Ok(&self.term(mu)?.coefficient)
    }

    /// `A_μ` or `B_μ`.
    pub fn coefficient(&self, mu: u32, ctx: &PrecisionContext) -> Result<HighPrecReal> {
        let wp = ctx.working();
        let exact = self.term(mu)?.coefficient.to_real(&wp);
        Ok((exact * self.leading_factor(&wp)?).round_to(ctx))
    }

    /// `Q_μ(N) / T` or `D_μ(N) / T`: the collected coefficient of `r^power`.
    pub fn collected_exact(&self, power: u32, n: u32) -> Result<RBig> {
        let mut total = RBig::ZERO;
        for mu in self.basis.first_index()..=n {
            let term = self.term(mu)?;
            if let Some(c) = term.poly_coeff(power) {
                total += &term.weight * c;
            }
        }
        Ok(total)
    }

    /// `Q_μ(N)` or `D_μ(N)`.
    pub fn collected(&self, power: u32, n: u32, ctx: &PrecisionContext) -> Result<HighPrecReal> {
        let wp = ctx.working();
        let exact = wp.rational(&self.collected_exact(power, n)?);
        Ok((exact * self.leading_factor(&wp)?).round_to(ctx))
    }

    fn check_moments(&self, n: u32, moments: &[RBig]) -> Result<()> {
        let needed = self.basis.max_power(n) as usize + 1;
        if moments.len() < needed {
            return Err(Error::InvalidParameter(format!(
                "{} moments supplied, {needed} needed",
                moments.len()
            )));
        }
        Ok(())
    }

    /// `(1/T) Σ_μ A_μ Σ_s Π_{μs} m_s` for each order `N` from the first index
    /// to `n_max`, summed in basis order.
    pub fn arranged_partial_sums(&self, n_max: u32, moments: &[RBig]) -> Result<Vec<(u32, RBig)>> {
        self.check_moments(n_max, moments)?;
        let mut total = RBig::ZERO;
        let mut out = Vec::new();
        for mu in self.basis.first_index()..=n_max {
            let term = self.term(mu)?;
            let inner = term
                .poly
                .iter()
                .enumerate()
                .fold(RBig::ZERO, |acc, (i, c)| acc + c * &moments[term.offset as usize + i]);
            total += &term.weight * inner;
            out.push((mu, total.clone()));
        }
        Ok(out)
    }

    /// `(1/T) Σ_μ Q_μ(N) m_μ` for each order `N`, with the collected
    /// coefficients updated as each new basis function enters.
    pub fn rearranged_partial_sums(&self, n_max: u32, moments: &[RBig]) -> Result<Vec<(u32, RBig)>> {
        self.check_moments(n_max, moments)?;
        let mut collected = vec![RBig::ZERO; self.basis.max_power(n_max) as usize + 1];
        let mut out = Vec::new();
        for n in self.basis.first_index()..=n_max {
            let term = self.term(n)?;
            for (i, c) in term.poly.iter().enumerate() {
                collected[term.offset as usize + i] += &term.weight * c;
            }
            let low = match self.basis {
                Basis::Ltp { nu, .. } => nu as usize,
                Basis::Glp { .. } => 0,
            };
            let high = self.basis.max_power(n) as usize;
            let sum = (low..=high).fold(RBig::ZERO, |acc, p| acc + &collected[p] * &moments[p]);
            out.push((n, sum));
        }
        Ok(out)
    }

    /// `A` or `B` for every index up to `n`.
    pub fn coefficient_table(&self, n: u32, ctx: &PrecisionContext) -> Result<ExpansionCoeffTable> {
        let coefficients = (self.basis.first_index()..=n)
            .map(|mu| Ok((mu, self.coefficient(mu, ctx)?)))
            .collect::<Result<_>>()?;
        Ok(ExpansionCoeffTable {
            basis: self.basis,
            eta_star: self.eta_star.clone(),
            xi: self.xi.clone(),
            coefficients,
            precision: *ctx,
        })
    }

    /// `Q` or `D` for every power present at truncation order `n`.
    pub fn rearranged_table(&self, n: u32, ctx: &PrecisionContext) -> Result<RearrangedCoeffTable> {
        let low = match self.basis {
            Basis::Ltp { nu, .. } => nu,
            Basis::Glp { .. } => 0,
        };
        let coefficients = (low..=self.basis.max_power(n))
            .map(|p| Ok((p, self.collected(p, n, ctx)?)))
            .collect::<Result<_>>()?;
        Ok(RearrangedCoeffTable {
            basis: self.basis,
            n,
            coefficients,
        })
    }

    /// Parseval tail `Σ_{μ>N} c_μ²` of the LTP expansion, with `c_μ = A_μ/(2μ)^{α/2}`
    /// the coefficients in the orthonormal system `(2μ/r)^{α/2} 𝓛^α_{μν}`.
    /// Computed as `‖r^{−α/2} f‖² − Σ_{μ≤N} c_μ²` in the measure `e^{−r} r² dr`.
    pub fn parseval_tail(&self, n: u32, ctx: &PrecisionContext) -> Result<HighPrecReal> {
        let Basis::Ltp { alpha, .. } = self.basis else {
            return Err(Error::InvalidParameter(
                "Parseval tail is defined for the LTP basis".into(),
            ));
        };
        let wp = ctx.working();
        let mut partial = RBig::ZERO;
        for mu in self.basis.first_index()..=n {
            let c = &self.term(mu)?.coefficient;
            let square = c.rational() * c.rational() * RBig::from(c.radicand().clone());
            partial += square / pow_rational(&RBig::from(2 * mu as i64), alpha as i64);
        }
        let lead = self.leading_factor(&wp)?;
        let exponent = RBig::from(3 - alpha as i64) + RBig::from(2) * &self.eta_star;
        let norm =
            gamma_rational(&exponent, &wp)? / rational_power(&(RBig::ONE + RBig::from(2) * &self.xi), &exponent, &wp);
        Ok((norm - &lead * &lead * wp.rational(&partial)).round_to(ctx))
    }
}
