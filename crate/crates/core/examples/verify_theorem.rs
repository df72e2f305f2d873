//! Runs the exact verification for `n = 1..=N` and prints each report.
//!
//! Run with `cargo run --release --example verify_theorem -- 6`.

use tl_markov::ortho::verify_orthogonality;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let mut all_passed = true;
    for n in 1..=max {
        let report = verify_orthogonality(n)?;
        print!("{}", report.render_text());
        eprint!("{}", report.render_timings());
        all_passed &= report.passed;
    }
    std::process::exit(i32::from(!all_passed));
}
