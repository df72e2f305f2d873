//! Compares the Gram determinant, computed by fraction-free elimination,
//! with the product of the predicted diagonal entries.

use tl_markov::markov::gram;
use tl_markov::ortho::{bareiss_det_matrix, det_product};
use tl_markov::RationalFunction;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for n in 1..=max {
        let det = bareiss_det_matrix(&gram(n))?;
        let product = det_product(n)?;
        let agree = RationalFunction::from(det.clone()) == product;
        println!("n = {n}: det G = {det}");
        println!("        agrees with the diagonal product: {agree}");
    }
    Ok(())
}
