//! The polynomials Δ_k, their quotients, and where they vanish.

use tl_markov::qpoly::{chebyshev, chebyshev_quotient, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in -1..=6 {
        println!("Δ_{k} = {}", chebyshev(k)?);
    }
    for k in 1..=4 {
        println!("Δ_{k}/Δ_{} = {}", k - 1, chebyshev_quotient(k)?);
    }
    // Δ_m vanishes at 2cos(π/(m+1)); exact evaluation elsewhere stays exact
    for m in 1..=6_i64 {
        let root = 2.0 * (std::f64::consts::PI / (m + 1) as f64).cos();
        let at_root = chebyshev(m)?.eval_f64(root);
        let at_three = chebyshev(m)?.eval_at(&"3".parse::<Scalar>()?);
        println!("Δ_{m}({root:.6}) = {at_root:.1e}, Δ_{m}(3) = {at_three}");
    }
    Ok(())
}
