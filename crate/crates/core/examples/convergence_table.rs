//! Convergence of the four series representations of a Coulomb (ξ = 0) and a
//! Yukawa (ξ = 5.1) radial integral, printed as CSV.

use std::time::Instant;

use laguerre_ltp::numerics::{parse_decimal, PrecisionContext};
use laguerre_ltp::report::convergence_table_report;
use laguerre_ltp::sto::{convergence_table, IntegralSpec, Method, StoParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = PrecisionContext::default();
    let bra = StoParams::new(parse_decimal("2.3")?, parse_decimal("3.56")?)?;
    let ket = StoParams::new(parse_decimal("4.6")?, parse_decimal("4.65")?)?;
    for xi in ["0", "5.1"] {
        let spec = IntegralSpec::new(bra.clone(), ket.clone(), parse_decimal("1.1")?, parse_decimal(xi)?)?;
        let start = Instant::now();
        let rows = convergence_table(&spec, &Method::ALL, &[-2, -1, 0, 1, 2], 0, 60, &ctx)?;
        eprintln!("xi = {xi}: {} rows in {:.2?}", rows.len(), start.elapsed());
        let summary: Vec<_> = rows.into_iter().filter(|r| [10, 20, 40, 60].contains(&r.n)).collect();
        print!(
            "{}",
            convergence_table_report(&summary, &PrecisionContext::new(64)?).to_csv()
        );
    }
    Ok(())
}
