//! One Coulomb–Yukawa radial integral of two Slater-type orbitals, by the
//! closed form, by quadrature and by the four truncated series.

use laguerre_ltp::expansions::Basis;
use laguerre_ltp::numerics::{parse_decimal, PrecisionContext};
use laguerre_ltp::sto::{analytic_i, quadrature_i, series_i, sto_radial, Form, IntegralSpec, StoParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = PrecisionContext::default();
    let bra = StoParams::new(parse_decimal("1.5")?, parse_decimal("1.2")?)?;
    let ket = StoParams::new(parse_decimal("2.5")?, parse_decimal("0.8")?)?;
    println!("R(r=1) = {}", sto_radial(&bra, &ctx.one(), &ctx)?.to_sci_string(20));

    let spec = IntegralSpec::new(bra, ket, parse_decimal("1.7")?, parse_decimal("0.3")?)?;
    let analytic = analytic_i(&spec, &ctx)?;
    let quadrature = quadrature_i(&spec, 200, &ctx)?;
    println!("closed form {}", analytic.to_sci_string(40));
    println!("quadrature  {}", quadrature.to_sci_string(40));

    for basis in [Basis::Ltp { alpha: 1, nu: 0 }, Basis::Glp { nu: 0 }] {
        for form in [Form::Arranged, Form::Rearranged] {
            let value = series_i(&spec, basis, form, 30, &ctx)?;
            let rel = ((&value - &analytic) / &analytic).abs();
            println!(
                "{basis} {form:?} N=30: {} rel err {}",
                value.to_sci_string(20),
                rel.to_sci_string(3)
            );
        }
    }
    Ok(())
}
