//! Laguerre-series expansion of `r^{η*} e^{-ξr}` in both bases: the
//! coefficients, the collected (rearranged) coefficients, and the partial sums
//! against the function itself.

use laguerre_ltp::expansions::{
    arranged_sum_glp, arranged_sum_ltp, rearranged_sum_ltp, split_mu_star, target_function, Basis, Expansion,
};
use laguerre_ltp::numerics::{parse_decimal, PrecisionContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = PrecisionContext::new(128)?;
    let eta = parse_decimal("0.1")?;
    let xi = parse_decimal("0.5")?;

    let expansion = Expansion::up_to(Basis::Ltp { alpha: 0, nu: 0 }, &eta, &xi, 8)?;
    for (mu, a) in expansion.coefficient_table(8, &ctx)?.coefficients {
        println!("A_{mu} = {}", a.to_sci_string(20));
    }
    for (power, q) in expansion.rearranged_table(8, &ctx)?.coefficients {
        println!("Q_{power}(8) = {}", q.to_sci_string(20));
    }
    println!(
        "Parseval tail beyond N=8: {}",
        expansion.parseval_tail(8, &ctx)?.to_sci_string(10)
    );

    let target = split_mu_star(&(parse_decimal("1")? + &eta))?.with_xi(xi.clone())?;
    let r = ctx.parse("1.5")?;
    println!("f(1.5) = {}", target_function(&target, &r, &ctx)?.to_sci_string(20));
    for n in [5, 10, 20, 30] {
        let arranged = arranged_sum_ltp(0, 0, &eta, &xi, n, &r, &ctx)?;
        let rearranged = rearranged_sum_ltp(0, 0, &eta, &xi, n, &r, &ctx)?;
        let glp = arranged_sum_glp(0, &eta, &xi, n, &r, &ctx)?;
        println!(
            "N={n:>2}: ltp {} (rearranged identical: {})  glp {}",
            arranged.to_sci_string(20),
            arranged == rearranged,
            glp.to_sci_string(20)
        );
    }
    Ok(())
}
