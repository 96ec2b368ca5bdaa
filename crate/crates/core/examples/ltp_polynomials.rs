//! Exact coefficients of a few L^α Laguerre-type polynomials, their weighted
//! partners, and the radial functions built from them.

use laguerre_ltp::laguerre::{ltp_poly, ltp_standard_convention, ltp_weighted_poly, radial_r, LtpIndices, RadialScale};
use laguerre_ltp::numerics::PrecisionContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (alpha, n, l) in [(0, 1, 0), (0, 2, 0), (1, 3, 1), (-2, 3, 0), (2, 4, 2)] {
        let idx = LtpIndices::new(alpha, n, l)?;
        let poly = ltp_poly(idx);
        println!("{idx} p={} q={}", idx.p(), idx.q());
        println!("  L      = {poly}");
        println!("  L bar  = {}", ltp_weighted_poly(idx));
        println!(
            "  standard convention agrees: {}",
            ltp_standard_convention(idx) == *poly
        );
    }

    let ctx = PrecisionContext::new(128)?;
    let scale = RadialScale::new(ctx.one())?;
    let idx = LtpIndices::new(0, 2, 0)?;
    for r in ["0.25", "0.5", "1", "2", "4"] {
        let value = radial_r(idx, &scale, &ctx.parse(r)?, &ctx)?;
        println!("R{idx}(zeta=1, r={r}) = {}", value.to_sci_string(25));
    }
    Ok(())
}
