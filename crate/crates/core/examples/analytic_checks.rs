//! Differential equations, polynomial identities, the potential decomposition
//! and finite-rank completeness, all checked exactly.

use laguerre_ltp::checks::{
    completeness_projection, convention_bridge_residual, derivative_shift_check, glp_ode_residual_poly,
    ltp_ode_residual_poly, potentials,
};
use laguerre_ltp::laguerre::{GlpIndices, LtpIndices, RadialScale};
use laguerre_ltp::numerics::PrecisionContext;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = GlpIndices::new(7, 3)?;
    println!("GLP ODE residual {g}: {}", glp_ode_residual_poly(g)?);
    println!("convention bridge residual {g}: {}", convention_bridge_residual(g)?);
    println!("derivative shift residual {g}, k=2: {}", derivative_shift_check(g, 2)?);

    let idx = LtpIndices::new(-1, 5, 2)?;
    println!("LTP ODE residual {idx}: {}", ltp_ode_residual_poly(idx)?);

    let ctx = PrecisionContext::default();
    let scale = RadialScale::new(ctx.parse("1.5")?)?;
    for alpha in -2..=2 {
        let idx = LtpIndices::new(alpha, 3, 1)?;
        let d = potentials(idx, &scale, &ctx.parse("0.7")?, &ctx)?;
        println!(
            "{idx}: core={} frictional={} ratio form={} ulps apart={}",
            d.core.to_sci_string(12),
            d.frictional.to_sci_string(12),
            d.frictional_ratio.to_sci_string(12),
            d.frictional.ulps_between(&d.frictional_ratio, ctx.bits()),
        );
    }

    let xs = [ctx.parse("0.5")?, ctx.parse("3")?];
    for m in [3, 6] {
        let residual = completeness_projection(0, 1, 4, m, &xs, &ctx)?;
        let shown: Vec<String> = residual.iter().map(|v| v.to_sci_string(15)).collect();
        println!("completeness N=4 applied to m={m}: {shown:?}");
    }
    Ok(())
}
