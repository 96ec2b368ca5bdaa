//! Batch command-line front end.
//!
//! Every subcommand builds one [`Table`], writes it to `--output` (or stdout)
//! and exits with [`EXIT_OK`] only if every check in the run passed.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dashu::rational::RBig;
use rayon::prelude::*;

use crate::checks::{
    convention_bridge_residual, derivative_shift_check, glp_ode_residual_poly, ltp_ode_residual_poly,
    orthonormality_matrix, potentials,
};
use crate::error::Error;
use crate::expansions::{
    arranged_sum_glp, arranged_sum_ltp, rearranged_sum_glp, rearranged_sum_ltp, split_mu_star, target_function,
};
use crate::laguerre::{ltp_poly, ltp_standard_convention, ExactPolynomial, GlpIndices, LtpIndices, RadialScale};
use crate::numerics::{parse_decimal, HighPrecReal, PrecisionContext};
use crate::report::{convergence_table_report, Cell, Format, Table, CONVERGENCE_HEADER};
use crate::sto::{analytic_i, convergence_table, quadrature_i, series_i, IntegralSpec, Method, StoParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

/// Largest distance, in units of the last place, accepted between two exact
/// reformulations that are each rounded once.
const ULP_TOLERANCE: f64 = 8.0;

#[derive(Debug, Parser)]
#[command(
    name = "ltp",
    version,
    about = "L^alpha Laguerre-type polynomials, Laguerre series and STO integrals"
)]
struct Cli {
    /// Mantissa bits of every floating-point result (at least 64).
    #[arg(long, global = true, default_value_t = PrecisionContext::DEFAULT_BITS)]
    precision: usize,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact biorthonormality matrices.
    Ortho(OrthoArgs),
    /// Differential equations, polynomial identities and the potential decomposition.
    Checks(ChecksArgs),
    /// Arranged and rearranged partial sums of r^{eta*} e^{-xi r} against the function itself.
    Expand(ExpandArgs),
    /// One radial integral by a chosen method.
    Integral(IntegralArgs),
    /// Convergence of the series methods against the closed form.
    Converge(ConvergeArgs),
}

#[derive(Debug, Args)]
struct OrthoArgs {
    /// Inclusive range `a:b` (or a single value) of alpha.
    #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, default_value_t = 3)]
    lmax: u32,
    /// Matrix size; n runs over l+1..=l+nmax.
    #[arg(long, default_value_t = 10)]
    nmax: u32,
}

#[derive(Debug, Args)]
struct ChecksArgs {
    #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
    alpha: String,
    /// Largest principal quantum number of the LTP checks.
    #[arg(long, default_value_t = 10)]
    nmax: u32,
    /// Largest GLP degree index q.
    #[arg(long, default_value_t = 14)]
    qmax: u32,
    #[arg(long, default_value = "1")]
    zeta: String,
    /// Sample points per index set for the potential decomposition.
    #[arg(long, default_value_t = 20)]
    points: u32,
}

#[derive(Debug, Args)]
struct ExpandArgs {
    #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, default_value_t = 0)]
    nu: u32,
    /// Power eta* in [0, 1) of the expanded function.
    #[arg(long, default_value = "0.5")]
    eta: String,
    #[arg(long, default_value = "0")]
    xi: String,
    /// Truncation order.
    #[arg(long = "N", default_value_t = 20)]
    n: u32,
    /// Comma-separated radii.
    #[arg(long, default_value = "0.5,1,2,4")]
    points: String,
}

#[derive(Debug, Args)]
struct StoArgs {
    #[arg(long, default_value = "2.3")]
    nstar: String,
    #[arg(long, default_value = "4.6")]
    npstar: String,
    #[arg(long, default_value = "3.56")]
    zeta: String,
    #[arg(long, default_value = "4.65")]
    zetap: String,
    #[arg(long, default_value = "1.1")]
    mustar: String,
    #[arg(long, default_value = "0")]
    xi: String,
    #[arg(long, default_value_t = 0)]
    nu: u32,
}

#[derive(Debug, Args)]
struct IntegralArgs {
    #[command(flatten)]
    sto: StoArgs,
    /// `analytic`, `quadrature` or one of the series methods.
    #[arg(long, default_value = "analytic")]
    method: String,
    /// Alpha (or range) of the LTP series methods.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long = "N", default_value_t = 40)]
    n: u32,
}

#[derive(Debug, Args)]
struct ConvergeArgs {
    #[command(flatten)]
    sto: StoArgs,
    /// Comma-separated series methods.
    #[arg(long, default_value = "ltp-arranged,ltp-rearranged,glp-arranged,glp-rearranged")]
    method: String,
    #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long = "Nmax", default_value_t = 40)]
    n_max: u32,
    /// Fail if any row at N = Nmax has a larger relative error.
    #[arg(long)]
    max_rel_err: Option<String>,
}

enum CliError {
    Usage(String),
    Compute(Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Compute(err)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(message: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(message.into()))
}

/// A finished table plus the index of its first failing row, if any.
struct Report {
    table: Table,
    first_failure: Option<usize>,
}

impl Report {
    fn new(header: &[&str]) -> Self {
        Self {
            table: Table::new(header),
            first_failure: None,
        }
    }

    fn push(&mut self, row: Vec<Cell>, pass: bool) {
        if !pass && self.first_failure.is_none() {
            self.first_failure = Some(self.table.len());
        }
        self.table.push(row);
    }

    fn fail_at(&mut self, index: usize) {
        self.first_failure = Some(self.first_failure.map_or(index, |i| i.min(index)));
    }
}

fn decimal(name: &str, text: &str) -> CliResult<RBig> {
    parse_decimal(text).or_else(|_| usage(format!("--{name}: {text:?} is not a decimal number")))
}

fn alpha_range(text: &str) -> CliResult<Vec<i32>> {
    let parse = |s: &str| {
        s.trim()
            .parse::<i32>()
            .or_else(|_| usage(format!("--alpha: {text:?} is not an integer or a range a:b")))
    };
    let (lo, hi) = match text.split_once(':') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let a = parse(text)?;
            (a, a)
        }
    };
    if lo > hi {
        return usage(format!("--alpha: empty range {text:?}"));
    }
    if hi > LtpIndices::MAX_ALPHA {
        return usage(format!("--alpha: alpha must not exceed {}", LtpIndices::MAX_ALPHA));
    }
    Ok((lo..=hi).collect())
}

fn sto_spec(args: &StoArgs) -> CliResult<IntegralSpec> {
    let build = || -> crate::Result<IntegralSpec> {
        IntegralSpec::new(
            StoParams::new(parse_decimal(&args.nstar)?, parse_decimal(&args.zeta)?)?,
            StoParams::new(parse_decimal(&args.npstar)?, parse_decimal(&args.zetap)?)?,
            parse_decimal(&args.mustar)?,
            parse_decimal(&args.xi)?,
        )
    };
    build().or_else(|e| usage(e.to_string()))
}

fn poly_cell(result: crate::Result<ExactPolynomial>) -> CliResult<(Cell, bool)> {
    let residual = result?;
    Ok((Cell::Text(residual.to_string()), residual.is_zero()))
}

fn ortho(args: &OrthoArgs) -> CliResult<Report> {
    let alphas = alpha_range(&args.alpha)?;
    if args.nmax == 0 {
        return usage("--nmax must be positive");
    }
    let jobs: Vec<(i32, u32)> = alphas
        .iter()
        .flat_map(|&a| (0..=args.lmax).map(move |l| (a, l)))
        .collect();
    let matrices = jobs
        .par_iter()
        .map(|&(a, l)| orthonormality_matrix(a, l, args.nmax))
        .collect::<crate::Result<Vec<_>>>()?;
    let mut report = Report::new(&["alpha", "l", "n", "n_prime", "value", "expected", "pass"]);
    for ((alpha, l), matrix) in jobs.into_iter().zip(matrices) {
        for entry in matrix.into_iter().flatten() {
            let pass = entry.holds();
            report.push(
                vec![
                    alpha.into(),
                    l.into(),
                    entry.n.into(),
                    entry.n_prime.into(),
                    Cell::Text(entry.value.to_string()),
                    Cell::Int(entry.expected.into()),
                    pass.into(),
                ],
                pass,
            );
        }
    }
    Ok(report)
}

/// Deterministic, well-spread sample in `(0, 1)`: fractional parts of `k/φ`.
fn spread(k: u32) -> RBig {
    let inverse_golden = parse_decimal("0.6180339887498948482").expect("literal");
    let value = RBig::from(k + 1) * inverse_golden;
    let whole = value.floor();
    value - RBig::from(whole)
}

fn ltp_indices(alphas: &[i32], n_max: u32) -> crate::Result<Vec<LtpIndices>> {
    let mut out = Vec::new();
    for &a in alphas {
        for n in 1..=n_max {
            for l in 0..n {
                out.push(LtpIndices::new(a, n, l)?);
            }
        }
    }
    Ok(out)
}

fn potential_row(idx: LtpIndices, zeta: &RBig, points: u32, ctx: &PrecisionContext) -> crate::Result<(String, bool)> {
    let scale = RadialScale::new(ctx.rational(zeta))?;
    // nodes of 𝓛 lie below x ≈ 4n, so sample a little beyond
    let x_span = RBig::from(4 * idx.n() + 4);
    let mut worst = 0.0f64;
    let mut skipped = 0;
    let mut pass = true;
    for k in 0..points {
        let x = &x_span * spread(k);
        let r = ctx.rational(&(x / (RBig::from(2) * zeta)));
        match potentials(idx, &scale, &r, ctx) {
            Ok(d) => {
                let ulps = d.frictional.ulps_between(&d.frictional_ratio, ctx.bits());
                worst = worst.max(ulps);
                pass &= ulps <= ULP_TOLERANCE;
                if idx.alpha() == 1 {
                    pass &= d.frictional.is_zero() && d.frictional_ratio.is_zero();
                }
            }
            Err(Error::SingularPoint { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok((format!("max_ulps={worst} skipped={skipped}"), pass))
}

fn checks(args: &ChecksArgs, ctx: &PrecisionContext) -> CliResult<Report> {
    let alphas = alpha_range(&args.alpha)?;
    let zeta = decimal("zeta", &args.zeta)?;
    if zeta <= RBig::ZERO {
        return usage("--zeta must be positive");
    }
    let mut report = Report::new(&["check", "indices", "value", "pass"]);
    let push = |report: &mut Report, check: &str, indices: String, (value, pass): (Cell, bool)| {
        report.push(vec![check.into(), indices.into(), value, pass.into()], pass);
    };

    for q in 0..=args.qmax {
        for p in 0..=q {
            let g = GlpIndices::new(q, p).map_err(CliError::Compute)?;
            push(
                &mut report,
                "glp-ode",
                format!("q={q} p={p}"),
                poly_cell(glp_ode_residual_poly(g))?,
            );
            push(
                &mut report,
                "convention-bridge",
                format!("q={q} p={p}"),
                poly_cell(convention_bridge_residual(g))?,
            );
            for k in 1..=q - p {
                push(
                    &mut report,
                    "derivative-shift",
                    format!("q={q} p={p} k={k}"),
                    poly_cell(derivative_shift_check(g, k))?,
                );
            }
        }
    }

    let indices = ltp_indices(&alphas, args.nmax)?;
    for &idx in &indices {
        let label = format!("alpha={} n={} l={}", idx.alpha(), idx.n(), idx.l());
        push(
            &mut report,
            "ltp-ode",
            label.clone(),
            poly_cell(ltp_ode_residual_poly(idx))?,
        );
        let standard = ltp_standard_convention(idx);
        let direct = ltp_poly(idx);
        let equal = standard == *direct;
        let value = match standard.try_sub(&direct) {
            Ok(diff) => Cell::Text(diff.to_string()),
            Err(_) => Cell::Text("incommensurable radicals".into()),
        };
        push(&mut report, "convention-equality", label, (value, equal));
    }

    let rows = indices
        .par_iter()
        .map(|&idx| potential_row(idx, &zeta, args.points, ctx))
        .collect::<crate::Result<Vec<_>>>()?;
    for (idx, (value, pass)) in indices.iter().zip(rows) {
        let label = format!("alpha={} n={} l={}", idx.alpha(), idx.n(), idx.l());
        push(&mut report, "potentials", label, (Cell::Text(value), pass));
    }
    Ok(report)
}

fn radii(text: &str, ctx: &PrecisionContext) -> CliResult<Vec<(String, HighPrecReal)>> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            let value = decimal("points", s)?;
            if value < RBig::ZERO {
                return usage(format!("--points: {s} is negative"));
            }
            Ok((s.to_string(), ctx.rational(&value)))
        })
        .collect()
}

fn expand(args: &ExpandArgs, ctx: &PrecisionContext) -> CliResult<Report> {
    let alphas = alpha_range(&args.alpha)?;
    let eta = decimal("eta", &args.eta)?;
    let xi = decimal("xi", &args.xi)?;
    if eta < RBig::ZERO || eta >= RBig::ONE {
        return usage("--eta must lie in [0, 1)");
    }
    if xi < RBig::ZERO {
        return usage("--xi must be nonnegative");
    }
    let points = radii(&args.points, ctx)?;
    let target_spec = split_mu_star(&(RBig::ONE + &eta))?.with_xi(xi.clone())?;

    let mut jobs: Vec<Option<i32>> = alphas.into_iter().map(Some).collect();
    jobs.push(None);
    let (nu, n) = (args.nu, args.n);
    let mut report = Report::new(&[
        "basis",
        "alpha",
        "nu",
        "N",
        "r",
        "arranged",
        "rearranged",
        "target",
        "ulps",
        "pass",
    ]);
    for alpha in jobs {
        let first = if alpha.is_some() { nu + 1 } else { nu };
        if n < first {
            return usage(format!("--N must be at least {first}"));
        }
        for (label, r) in &points {
            let (arranged, rearranged) = match alpha {
                Some(a) => (
                    arranged_sum_ltp(a, nu, &eta, &xi, n, r, ctx)?,
                    rearranged_sum_ltp(a, nu, &eta, &xi, n, r, ctx)?,
                ),
                None => (
                    arranged_sum_glp(nu, &eta, &xi, n, r, ctx)?,
                    rearranged_sum_glp(nu, &eta, &xi, n, r, ctx)?,
                ),
            };
            let target = target_function(&target_spec, r, ctx)?;
            let ulps = arranged.ulps_between(&rearranged, ctx.bits());
            let pass = ulps <= ULP_TOLERANCE;
            report.push(
                vec![
                    if alpha.is_some() { "ltp" } else { "glp" }.into(),
                    alpha.into(),
                    nu.into(),
                    n.into(),
                    label.as_str().into(),
                    Cell::real(&arranged, ctx),
                    Cell::real(&rearranged, ctx),
                    Cell::real(&target, ctx),
                    Cell::Text(ulps.to_string()),
                    pass.into(),
                ],
                pass,
            );
        }
    }
    Ok(report)
}

fn relative_error(value: &HighPrecReal, analytic: &HighPrecReal, ctx: &PrecisionContext) -> HighPrecReal {
    let diff = (value - analytic).abs();
    if analytic.is_zero() {
        diff.round_to(ctx)
    } else {
        (diff / analytic.abs()).round_to(ctx)
    }
}

fn integral(args: &IntegralArgs, ctx: &PrecisionContext) -> CliResult<Report> {
    let spec = sto_spec(&args.sto)?;
    let analytic = analytic_i(&spec, ctx)?;
    let nu = args.sto.nu;
    let mut report = Report::new(&CONVERGENCE_HEADER);
    let push = |report: &mut Report, method: &str, alpha: Option<i32>, n: Cell, value: HighPrecReal| {
        let rel_err = relative_error(&value, &analytic, ctx);
        report.push(
            vec![
                method.into(),
                alpha.into(),
                nu.into(),
                n,
                Cell::real(&value, ctx),
                Cell::real(&analytic, ctx),
                Cell::real(&rel_err, ctx),
            ],
            true,
        );
    };
    match args.method.as_str() {
        "analytic" => push(&mut report, "analytic", None, Cell::Empty, analytic.clone()),
        "quadrature" => {
            let tol_bits = ctx.bits().saturating_sub(16).max(48);
            let value = quadrature_i(&spec, tol_bits, ctx)?;
            push(&mut report, "quadrature", None, Cell::Empty, value);
        }
        other => {
            let method: Method = other
                .parse()
                .or_else(|_| usage(format!("--method: unknown method {other:?}")))?;
            let alphas = if method.uses_ltp() {
                alpha_range(&args.alpha)?.into_iter().map(Some).collect()
            } else {
                vec![None]
            };
            for alpha in alphas {
                let basis = method.basis(alpha.unwrap_or(0), nu);
                if args.n < basis.first_index() {
                    return usage(format!("--N must be at least {}", basis.first_index()));
                }
                let value = series_i(&spec, basis, method.form(), args.n, ctx)?;
                push(&mut report, method.as_str(), alpha, args.n.into(), value);
            }
        }
    }
    Ok(report)
}

fn methods(text: &str) -> CliResult<Vec<Method>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<Method>()
                .or_else(|_| usage(format!("--method: unknown method {s:?}")))
        })
        .collect()
}

fn converge(args: &ConvergeArgs, ctx: &PrecisionContext) -> CliResult<Report> {
    let spec = sto_spec(&args.sto)?;
    let alphas = alpha_range(&args.alpha)?;
    let methods = methods(&args.method)?;
    if args.n_max == 0 {
        return usage("--Nmax must be positive");
    }
    let bound = args
        .max_rel_err
        .as_deref()
        .map(|s| decimal("max-rel-err", s))
        .transpose()?;
    let rows = convergence_table(&spec, &methods, &alphas, args.sto.nu, args.n_max, ctx)?;
    let mut report = Report {
        table: convergence_table_report(&rows, ctx),
        first_failure: None,
    };

    // The two forms of one basis are the same finite sum.
    let mut partner: HashMap<(bool, Option<i32>, u32), usize> = HashMap::new();
    for (i, row) in rows.iter().enumerate() {
        let key = (row.method.uses_ltp(), row.alpha, row.n);
        match partner.get(&key) {
            Some(&j) if rows[j].value.ulps_between(&row.value, ctx.bits()) > ULP_TOLERANCE => report.fail_at(i),
            Some(_) => {}
            None => {
                partner.insert(key, i);
            }
        }
    }
    if let Some(bound) = bound {
        for (i, row) in rows.iter().enumerate() {
            if row.n == args.n_max && row.rel_err.to_rational() > bound {
                report.fail_at(i);
            }
        }
    }
    Ok(report)
}

fn execute(cli: &Cli, ctx: &PrecisionContext) -> CliResult<Report> {
    match &cli.command {
        Command::Ortho(a) => ortho(a),
        Command::Checks(a) => checks(a, ctx),
        Command::Expand(a) => expand(a, ctx),
        Command::Integral(a) => integral(a, ctx),
        Command::Converge(a) => converge(a, ctx),
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit status: [`EXIT_OK`], [`EXIT_CHECK_FAILED`], [`EXIT_USAGE`]
/// or [`EXIT_ERROR`].
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let ctx = match PrecisionContext::new(cli.precision) {
        Ok(ctx) => ctx,
        Err(e) => {
            let _ = writeln!(stderr, "error: --precision: {e}");
            return EXIT_USAGE;
        }
    };
    let report = match execute(&cli, &ctx) {
        Ok(report) => report,
        Err(CliError::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            return EXIT_USAGE;
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ERROR;
        }
    };

    let format = if cli.json {
        Format::Json
    } else {
        match cli.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    };
    let text = report.table.render(format);
    let written = match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(message) = written {
        let _ = writeln!(stderr, "error: cannot write report: {message}");
        return EXIT_ERROR;
    }

    match report.first_failure {
        None => EXIT_OK,
        Some(index) => {
            let row = report.table.describe_row(index).unwrap_or_default();
            let _ = writeln!(stderr, "check failed: {row}");
            EXIT_CHECK_FAILED
        }
    }
}
