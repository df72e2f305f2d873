//! Walks from the top diagram down to the bottom one by quad moves, which
//! realize the cover relation of the coordinate-wise order.

use tl_markov::diagrams::{apply_quad, leq, quad_reachable, quad_sites};
use tl_markov::RestrictedSequence;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let top: RestrictedSequence = "4,3,2,1".parse()?;
    let bottom: RestrictedSequence = "1,1,1,1".parse()?;

    let m = top.to_matching();
    println!("{} = {m}", top.label());
    for site in quad_sites(&m) {
        let next = apply_quad(&m, site)?;
        println!(
            "  outer {:?}, inner {:?} -> {} = {next}",
            site.outer,
            site.inner,
            next.to_sequence().label()
        );
    }

    assert!(leq(&bottom, &top)?);
    if let Some(path) = quad_reachable(&bottom, &top)? {
        let labels: Vec<String> = path.iter().map(|s| s.label()).collect();
        println!("{} moves: {} -> {}", path.len(), top.label(), labels.join(" -> "));
    }
    Ok(())
}
