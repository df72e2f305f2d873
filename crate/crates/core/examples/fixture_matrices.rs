//! Checks the published three-arc change-of-basis matrices against the
//! Gram matrix and the computed recursion.

use tl_markov::ortho::check_fixture_bases;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = check_fixture_bases()?;
    for c in &report.configurations {
        let status = if c.erratum() { "mismatch" } else { "ok" };
        println!("{}: {status}", c.name);
    }
    println!(
        "same side vs recursion: {}",
        if report.same_side_vs_recursion.is_empty() { "equal" } else { "differ" }
    );
    for line in report.failure_lines() {
        println!("  {line}");
    }
    Ok(())
}
