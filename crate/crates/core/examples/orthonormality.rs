//! Exact biorthonormality of the Laguerre-type polynomials under
//! `e^{-x} x^2 dx` with the weight `(2n/x)^α` on one factor.

use laguerre_ltp::checks::{orthonormality_matrix, weighted_inner, weighted_inner_first};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for alpha in -2..=2 {
        for l in 0..=3 {
            let matrix = orthonormality_matrix(alpha, l, 10)?;
            let holds = matrix.iter().flatten().all(|e| e.holds());
            println!("alpha={alpha:>2} l={l}: 10x10 identity: {holds}");
        }
    }

    // The weight can sit on either factor; with none it is not orthogonal.
    let second = weighted_inner(1, 0, 2, 3)?;
    let first = weighted_inner_first(1, 0, 2, 3)?;
    println!("<L_2, Lbar_3> = {}  <Lbar_2, L_3> = {}", second.value, first.value);
    Ok(())
}
