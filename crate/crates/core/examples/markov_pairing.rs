//! Pairs two diagrams by gluing them along their boundary and counting the
//! closed loops, then prints the Gram matrix for small `n`.

use tl_markov::diagrams::Matching;
use tl_markov::markov::{gram, pair_diagrams, pair_vectors, DiagramVector};
use tl_markov::{RationalFunction, RestrictedSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = Matching::from_arcs(&[(1, 6), (2, 3), (4, 5)])?;
    let b = Matching::from_arcs(&[(1, 2), (3, 4), (5, 6)])?;
    println!("<{a}, {b}> = {}", pair_diagrams(&a, &b)?);

    let g = gram(2);
    print!("{}", g.to_csv());

    // e_(2,1) - (1/q) e_(1,1) is orthogonal to e_(1,1)
    let s21: RestrictedSequence = "2,1".parse()?;
    let s11: RestrictedSequence = "1,1".parse()?;
    let inv_q = RationalFunction::q().inv()?;
    let v = DiagramVector::from_terms(2, [(s21, RationalFunction::one()), (s11.clone(), -&inv_q)])?;
    let w = DiagramVector::basis(s11);
    println!("<{v}, {w}> = {}", pair_vectors(&v, &w, &g)?);
    println!("<{v}, {v}> = {}", pair_vectors(&v, &v, &g)?);
    Ok(())
}
