//! Lists the non-crossing chord diagrams with `n` arcs, each as a restricted
//! sequence and as an explicit matching, and checks the count against the
//! Catalan numbers.
//!
//! Run with `cargo run --example enumerate_diagrams -- 4`.

use tl_markov::diagrams::{enumerate, matching_to_seq};

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let all = enumerate(n);
    for s in &all {
        let m = s.to_matching();
        assert_eq!(matching_to_seq(&m), *s);
        println!("{:>12}  {m}", s.label());
    }
    println!("{} diagrams, Catalan({n}) = {}", all.len(), catalan(n));
}
