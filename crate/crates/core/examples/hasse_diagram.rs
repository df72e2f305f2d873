//! Emits the Hasse diagram of the coordinate-wise order as Graphviz DOT.
//!
//! `cargo run --example hasse_diagram -- 4 | dot -Tsvg > hasse4.svg`

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    print!("{}", tl_markov::diagrams::hasse_dot(n));
}
