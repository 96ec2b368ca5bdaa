//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Random draws come from a fixed seed so every run checks the same cases.

use std::time::{Duration, Instant};

use dashu::base::Abs;
use dashu::rational::RBig;
use laguerre_ltp::checks::{
    completeness_projection, convention_bridge_residual, derivative_shift_check, glp_ode_residual_poly,
    ltp_ode_residual_poly, orthonormality_matrix, potentials, projection_residual_poly,
};
use laguerre_ltp::expansions::{
    arranged_sum_glp, arranged_sum_ltp, rearranged_sum_glp, rearranged_sum_ltp, Basis, Expansion,
};
use laguerre_ltp::laguerre::{ltp_poly, ltp_standard_convention, GlpIndices, LtpIndices, RadialScale};
use laguerre_ltp::numerics::{parse_decimal, HighPrecReal, PrecisionContext};
use laguerre_ltp::sto::{analytic_i, convergence_table, quadrature_i, series_i, Form, IntegralSpec, Method, StoParams};
use laguerre_ltp::Error;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const BITS: usize = 256;
const ULPS: f64 = 8.0;
const SEED: u64 = 0x4c54_5021;

type Outcome = Result<String, String>;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(BITS).unwrap()
}

fn q(text: &str) -> RBig {
    parse_decimal(text).unwrap()
}

/// `k / 10^digits` drawn uniformly from `[lo, hi]` (both given in the same units).
fn decimal(rng: &mut StdRng, lo: i64, hi: i64, digits: u32) -> RBig {
    let k = rng.gen_range(lo..=hi);
    RBig::from(k) / RBig::from(10i64.pow(digits))
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn orthonormality() -> Outcome {
    let mut entries = 0;
    for alpha in -2..=2 {
        for l in 0..=3 {
            for entry in orthonormality_matrix(alpha, l, 10)
                .map_err(|e| e.to_string())?
                .into_iter()
                .flatten()
            {
                if !entry.holds() {
                    return Err(format!(
                        "alpha={alpha} l={l} n={} n'={} gives {}",
                        entry.n, entry.n_prime, entry.value
                    ));
                }
                entries += 1;
            }
        }
    }
    Ok(format!("{entries} exact entries"))
}

fn polynomial_identities() -> Outcome {
    let mut count = 0;
    for q in 0..=14 {
        for p in 0..=q {
            let g = GlpIndices::new(q, p).unwrap();
            let mut residuals = vec![
                ("bridge", convention_bridge_residual(g)),
                ("glp-ode", glp_ode_residual_poly(g)),
            ];
            for k in 1..=q - p {
                residuals.push(("shift", derivative_shift_check(g, k)));
            }
            for (name, r) in residuals {
                let r = r.map_err(|e| e.to_string())?;
                if !r.is_zero() {
                    return Err(format!("{name} at q={q} p={p}: {r}"));
                }
                count += 1;
            }
        }
    }
    for alpha in -2..=2 {
        for n in 1..=10 {
            for l in 0..n {
                let idx = LtpIndices::new(alpha, n, l).unwrap();
                let r = ltp_ode_residual_poly(idx).map_err(|e| e.to_string())?;
                if !r.is_zero() {
                    return Err(format!("ltp-ode at {idx}: {r}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} zero residual polynomials"))
}

fn convention_equality() -> Outcome {
    let mut count = 0;
    for alpha in -2..=2 {
        for n in 1..=10 {
            for l in 0..n {
                let idx = LtpIndices::new(alpha, n, l).unwrap();
                if ltp_standard_convention(idx) != *ltp_poly(idx) {
                    return Err(format!("differs at {idx}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} index sets equal"))
}

fn potential_decomposition(rng: &mut StdRng) -> Outcome {
    let c = ctx();
    let mut worst = 0.0f64;
    let mut points = 0;
    for alpha in -2..=2 {
        for n in 1..=6 {
            for l in 0..n {
                let idx = LtpIndices::new(alpha, n, l).unwrap();
                let zeta = decimal(rng, 10, 500, 2);
                let scale = RadialScale::new(c.rational(&zeta)).unwrap();
                let reach = RBig::from(4 * n + 4) / (RBig::from(2) * &zeta);
                let mut taken = 0;
                while taken < 20 {
                    let r = c.rational(&(&reach * decimal(rng, 1, 999_999, 6)));
                    let d = match potentials(idx, &scale, &r, &c) {
                        Ok(d) => d,
                        Err(Error::SingularPoint { .. }) => continue,
                        Err(e) => return Err(e.to_string()),
                    };
                    let ulps = d.frictional.ulps_between(&d.frictional_ratio, BITS);
                    worst = worst.max(ulps);
                    if ulps > ULPS {
                        return Err(format!("{idx} r={r}: forms {ulps} ulp apart"));
                    }
                    if alpha == 1 && !(d.frictional.is_zero() && d.frictional_ratio.is_zero()) {
                        return Err(format!("{idx} r={r}: alpha=1 frictional potential is {}", d.frictional));
                    }
                    taken += 1;
                    points += 1;
                }
            }
        }
    }
    Ok(format!("{points} points, worst {worst} ulp"))
}

fn random_spec(rng: &mut StdRng) -> IntegralSpec {
    IntegralSpec::new(
        StoParams::new(decimal(rng, 100, 500, 2), decimal(rng, 50, 500, 2)).unwrap(),
        StoParams::new(decimal(rng, 100, 500, 2), decimal(rng, 50, 500, 2)).unwrap(),
        decimal(rng, 100, 300, 2),
        decimal(rng, 0, 600, 2),
    )
    .unwrap()
}

fn rearrangement(rng: &mut StdRng) -> Outcome {
    let c = ctx();
    let mut worst = 0.0f64;
    let mut record = |what: &str, a: &HighPrecReal, b: &HighPrecReal| -> Result<(), String> {
        let ulps = a.ulps_between(b, BITS);
        worst = worst.max(ulps);
        if ulps > ULPS {
            return Err(format!("{what}: {a} vs {b}, {ulps} ulp"));
        }
        Ok(())
    };
    for _ in 0..50 {
        let (alpha, nu) = (rng.gen_range(-2..=2), rng.gen_range(0..3));
        let n = nu + 1 + rng.gen_range(0..25);
        let (eta, xi) = (decimal(rng, 0, 999, 3), decimal(rng, 0, 700, 2));
        let r = c.rational(&decimal(rng, 0, 8000, 3));
        let a = arranged_sum_ltp(alpha, nu, &eta, &xi, n, &r, &c).map_err(|e| e.to_string())?;
        let b = rearranged_sum_ltp(alpha, nu, &eta, &xi, n, &r, &c).map_err(|e| e.to_string())?;
        record(&format!("ltp expansion alpha={alpha} nu={nu} N={n}"), &a, &b)?;
    }
    for _ in 0..50 {
        let nu = rng.gen_range(0..3);
        let n = nu + rng.gen_range(0..25);
        let (eta, xi) = (decimal(rng, 0, 999, 3), decimal(rng, 0, 700, 2));
        let r = c.rational(&decimal(rng, 0, 8000, 3));
        let a = arranged_sum_glp(nu, &eta, &xi, n, &r, &c).map_err(|e| e.to_string())?;
        let b = rearranged_sum_glp(nu, &eta, &xi, n, &r, &c).map_err(|e| e.to_string())?;
        record(&format!("glp expansion nu={nu} N={n}"), &a, &b)?;
    }
    for ltp in [true, false] {
        for _ in 0..50 {
            let spec = random_spec(rng);
            let basis = if ltp {
                Basis::Ltp {
                    alpha: rng.gen_range(-2..=2),
                    nu: 0,
                }
            } else {
                Basis::Glp { nu: 0 }
            };
            let n = basis.first_index() + rng.gen_range(0..40);
            let a = series_i(&spec, basis, Form::Arranged, n, &c).map_err(|e| e.to_string())?;
            let b = series_i(&spec, basis, Form::Rearranged, n, &c).map_err(|e| e.to_string())?;
            record(&format!("{basis} integral N={n}"), &a, &b)?;
        }
    }
    Ok(format!("200 draws, worst {worst} ulp"))
}

fn oracle_agreement(rng: &mut StdRng) -> Outcome {
    let c = PrecisionContext::new(128).unwrap();
    let tolerance = q("1e-20");
    let mut worst = RBig::ZERO;
    for _ in 0..20 {
        let spec = random_spec(rng);
        let closed = analytic_i(&spec, &c).map_err(|e| e.to_string())?;
        let numeric = quadrature_i(&spec, 100, &c).map_err(|e| e.to_string())?;
        let rel = ((&numeric - &closed) / &closed).abs().to_rational();
        if rel > tolerance {
            return Err(format!("relative difference {} for {spec:?}", rel.to_f64().value()));
        }
        worst = worst.max(rel);
    }
    Ok(format!(
        "20 specs, worst relative difference {:e}",
        worst.to_f64().value()
    ))
}

fn figure_reproduction() -> Outcome {
    let c = ctx();
    let (at_40, at_60) = (q("1e-3"), q("1e-6"));
    let mut failures = Vec::new();
    let mut rows_checked = 0;
    for xi in ["0", "5.1"] {
        let spec = IntegralSpec::new(
            StoParams::new(q("2.3"), q("3.56")).unwrap(),
            StoParams::new(q("4.6"), q("4.65")).unwrap(),
            q("1.1"),
            q(xi),
        )
        .unwrap();
        let rows = convergence_table(&spec, &Method::ALL, &[-2, -1, 0, 1, 2], 0, 60, &c).map_err(|e| e.to_string())?;
        let lookup = |method: Method, alpha: Option<i32>, n: u32| {
            rows.iter()
                .find(|r| r.method == method && r.alpha == alpha && r.n == n)
                .map(|r| r.rel_err.to_rational())
                .expect("row present")
        };
        for method in Method::ALL {
            let alphas: Vec<Option<i32>> = if method.uses_ltp() {
                (-2..=2).map(Some).collect()
            } else {
                vec![None]
            };
            for alpha in alphas {
                rows_checked += 1;
                let (e10, e40, e60) = (
                    lookup(method, alpha, 10),
                    lookup(method, alpha, 40),
                    lookup(method, alpha, 60),
                );
                let label = format!("xi={xi} {method} alpha={}", alpha.map_or("-".into(), |a| a.to_string()));
                if e40 > at_40 {
                    failures.push(format!("{label} N=40 {:.2e}", e40.to_f64().value()));
                }
                if e60 > at_60 {
                    failures.push(format!("{label} N=60 {:.2e}", e60.to_f64().value()));
                }
                if e40 >= e10 {
                    failures.push(format!("{label} no decrease 10->40"));
                }
            }
        }
    }
    check(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{rows_checked} method/alpha series within bounds")
        } else {
            format!(
                "{} of {} bounds violated; first: {}",
                failures.len(),
                rows_checked * 3,
                failures[..3.min(failures.len())].join("; ")
            )
        },
    )
}

fn terminating_expansion() -> Outcome {
    let c = ctx();
    let zero = RBig::ZERO;
    let e = Expansion::up_to(Basis::Ltp { alpha: 0, nu: 0 }, &zero, &zero, 10).map_err(|e| e.to_string())?;
    let sqrt2 = c.int(2).sqrt();
    let a1 = e.coefficient(1, &c).map_err(|e| e.to_string())?;
    if a1.ulps_between(&sqrt2, BITS) > ULPS {
        return Err(format!("A_1 = {a1}"));
    }
    let ulp = sqrt2.ulp(BITS);
    for mu in 2..=10 {
        let a = e.coefficient(mu, &c).map_err(|e| e.to_string())?;
        if a.to_rational().abs() > RBig::from(8) * &ulp {
            return Err(format!("A_{mu} = {a}"));
        }
    }
    for r in ["0", "0.3", "1", "2.5", "7", "20"] {
        let r = c.parse(r).unwrap();
        for n in 1..=10 {
            let sum = arranged_sum_ltp(0, 0, &zero, &zero, n, &r, &c).map_err(|e| e.to_string())?;
            if sum.ulps_between(&c.one(), BITS) > ULPS {
                return Err(format!("partial sum N={n} at r={r} is {sum}"));
            }
        }
    }
    Ok("A_1 = sqrt(2), A_2..A_10 = 0, partial sums equal 1".into())
}

fn completeness() -> Outcome {
    let c = ctx();
    let xs: Vec<HighPrecReal> = ["0.2", "1", "3.7", "9"].iter().map(|s| c.parse(s).unwrap()).collect();
    let mut cases = 0;
    for alpha in -2..=2 {
        for l in 0..=2 {
            for n_max in l + 1..=8 {
                for m in l + 1..=n_max + 3 {
                    let residual = projection_residual_poly(alpha, l, n_max, m).map_err(|e| e.to_string())?;
                    let expected = if m <= n_max {
                        laguerre_ltp::laguerre::ExactPolynomial::zero()
                    } else {
                        ltp_poly(LtpIndices::new(alpha, m, l).unwrap()).scale(&RBig::NEG_ONE)
                    };
                    if residual != expected {
                        return Err(format!("alpha={alpha} l={l} N={n_max} m={m}: residual {residual}"));
                    }
                    if m <= n_max {
                        let values = completeness_projection(alpha, l, n_max, m, &xs, &c).map_err(|e| e.to_string())?;
                        if !values.iter().all(HighPrecReal::is_zero) {
                            return Err(format!(
                                "alpha={alpha} l={l} N={n_max} m={m}: nonzero projection residual"
                            ));
                        }
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} projections exact"))
}

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Option<Duration>,
}

fn main() {
    let criteria: Vec<(Criterion, Box<dyn Fn() -> Outcome>)> = vec![
        (
            Criterion {
                number: 1,
                title: "exact orthonormality",
                budget: Some(Duration::from_secs(30)),
            },
            Box::new(orthonormality),
        ),
        (
            Criterion {
                number: 2,
                title: "polynomial identities",
                budget: None,
            },
            Box::new(polynomial_identities),
        ),
        (
            Criterion {
                number: 3,
                title: "convention equality",
                budget: None,
            },
            Box::new(convention_equality),
        ),
        (
            Criterion {
                number: 4,
                title: "potential decomposition",
                budget: None,
            },
            Box::new(|| potential_decomposition(&mut StdRng::seed_from_u64(SEED ^ 4))),
        ),
        (
            Criterion {
                number: 5,
                title: "finite rearrangement",
                budget: None,
            },
            Box::new(|| rearrangement(&mut StdRng::seed_from_u64(SEED ^ 5))),
        ),
        (
            Criterion {
                number: 6,
                title: "closed form vs quadrature",
                budget: Some(Duration::from_secs(60)),
            },
            Box::new(|| oracle_agreement(&mut StdRng::seed_from_u64(SEED ^ 6))),
        ),
        (
            Criterion {
                number: 7,
                title: "convergence tables",
                budget: Some(Duration::from_secs(300)),
            },
            Box::new(figure_reproduction),
        ),
        (
            Criterion {
                number: 8,
                title: "terminating expansion",
                budget: None,
            },
            Box::new(terminating_expansion),
        ),
        (
            Criterion {
                number: 9,
                title: "completeness projection",
                budget: None,
            },
            Box::new(completeness),
        ),
    ];

    let mut failed = 0;
    for (criterion, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over_budget = criterion.budget.is_some_and(|b| elapsed > b);
        let (status, detail) = match (&outcome, over_budget) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {:?} budget", criterion.budget.unwrap())),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} [{status}] {} ({elapsed:.2?}): {detail}",
            criterion.number, criterion.title
        );
    }
    println!("{failed} of 9 criteria failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
