//! Exact diagonalization of the Markov bilinear form on the Temperley–Lieb
//! chord-diagram basis.
//!
//! * [`qpoly`]: polynomials over ℚ, rational functions in `q`, Chebyshev Δ_k.
//! * [`diagrams`]: restricted sequences, matchings, `l_k`, `τ_k`, the
//!   coordinate-wise order and quad moves.
//! * [`markov`]: the circle-counting pairing, Gram matrices, vectors in `V_n`.
//! * [`ortho`]: the recursively defined orthogonal basis and its exact
//!   verification, including a Bareiss determinant oracle.
//! * [`cli`]: the `tl-markov` command line.

pub mod cli;
pub mod diagrams;
pub mod markov;
pub mod ortho;
pub mod qpoly;

pub use diagrams::{Matching, QuadMoveSite, RestrictedSequence};
pub use markov::{DiagramVector, PairingValue, SquareMatrix};
pub use ortho::{OrthoBasis, VerificationReport};
pub use qpoly::{Polynomial, RationalFunction};
