use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::integral::{analytic_i, series_partial_sums, series_scale, Form};
use super::params::IntegralSpec;
use crate::error::{Error, Result};
use crate::expansions::Basis;
use crate::numerics::{HighPrecReal, PrecisionContext};

/// One of the four series representations of the integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    LtpArranged,
    LtpRearranged,
    GlpArranged,
    GlpRearranged,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::LtpArranged,
        Method::LtpRearranged,
        Method::GlpArranged,
        Method::GlpRearranged,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::LtpArranged => "ltp-arranged",
            Method::LtpRearranged => "ltp-rearranged",
            Method::GlpArranged => "glp-arranged",
            Method::GlpRearranged => "glp-rearranged",
        }
    }

    pub fn form(&self) -> Form {
        match self {
            Method::LtpArranged | Method::GlpArranged => Form::Arranged,
            Method::LtpRearranged | Method::GlpRearranged => Form::Rearranged,
        }
    }

    pub fn uses_ltp(&self) -> bool {
        matches!(self, Method::LtpArranged | Method::LtpRearranged)
    }

    /// Basis for this method; `alpha` is ignored for the GLP methods.
    pub fn basis(&self, alpha: i32, nu: u32) -> Basis {
        if self.uses_ltp() {
            Basis::Ltp { alpha, nu }
        } else {
            Basis::Glp { nu }
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown method {s:?}")))
    }
}

/// One row of a convergence table.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: u32,
    pub method: Method,
    pub alpha: Option<i32>,
    pub nu: u32,
    pub value: HighPrecReal,
    pub analytic: HighPrecReal,
    pub rel_err: HighPrecReal,
}

fn relative_error(value: &HighPrecReal, analytic: &HighPrecReal, ctx: &PrecisionContext) -> HighPrecReal {
    let diff = (value - analytic).abs();
    if analytic.is_zero() {
        return diff.round_to(ctx);
    }
    (diff / analytic.abs()).round_to(ctx)
}

fn job_rows(
    spec: &IntegralSpec,
    method: Method,
    alpha: Option<i32>,
    nu: u32,
    n_max: u32,
    analytic: &HighPrecReal,
    ctx: &PrecisionContext,
) -> Result<Vec<ConvergenceRow>> {
    let basis = method.basis(alpha.unwrap_or(0), nu);
    if n_max < basis.first_index() {
        return Ok(Vec::new());
    }
    let (expansion, sums) = series_partial_sums(spec, basis, method.form(), n_max)?;
    let wp = ctx.working();
    let scale = series_scale(spec, &expansion, &wp)?;
    Ok(sums
        .into_iter()
        .filter(|(n, _)| *n >= 1)
        .map(|(n, exact)| {
            let value = (&scale * &wp.rational(&exact)).round_to(ctx);
            ConvergenceRow {
                n,
                method,
                alpha,
                nu,
                rel_err: relative_error(&value, analytic, ctx),
                value,
                analytic: analytic.clone(),
            }
        })
        .collect())
}

/// Partial sums for `N = 1..=n_max` of every requested method (and, for the
/// LTP methods, every requested `α`), each against the closed form.
///
/// Rows are ordered by `(method, α, N)` independent of scheduling.
pub fn convergence_table(
    spec: &IntegralSpec,
    methods: &[Method],
    alphas: &[i32],
    nu: u32,
    n_max: u32,
    ctx: &PrecisionContext,
) -> Result<Vec<ConvergenceRow>> {
    if n_max < 1 {
        return Err(Error::InvalidParameter("N_max must be at least 1".into()));
    }
    let mut methods = methods.to_vec();
    methods.sort();
    methods.dedup();
    let mut alphas = alphas.to_vec();
    alphas.sort();
    alphas.dedup();
    let jobs: Vec<(Method, Option<i32>)> = methods
        .iter()
        .flat_map(|&m| {
            if m.uses_ltp() {
                alphas.iter().map(|&a| (m, Some(a))).collect::<Vec<_>>()
            } else {
                vec![(m, None)]
            }
        })
        .collect();
    let analytic = analytic_i(spec, ctx)?;
    let blocks: Vec<Result<Vec<ConvergenceRow>>> = jobs
        .par_iter()
        .map(|&(method, alpha)| job_rows(spec, method, alpha, nu, n_max, &analytic, ctx))
        .collect();
    let mut rows = Vec::new();
    for block in blocks {
        rows.extend(block?);
    }
    Ok(rows)
}
