//! Builds the orthogonal basis for `n` arcs and prints each vector with its
//! self-pairing.
//!
//! Run with `cargo run --example orthogonal_basis -- 3`.

use tl_markov::ortho::change_of_basis;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let ob = change_of_basis(n)?;
    for (i, s) in ob.basis.iter().enumerate() {
        println!("e'{} = {}", s.label(), ob.p.row_vector(i));
        println!("    <e', e'> = {}", ob.diagonal[i]);
    }
    Ok(())
}
