//! The published 5×5 change-of-basis matrices for three-arc diagrams.
//!
//! Three come from colored trivalent trees (the Y, same-side and
//! opposite-side configurations) and one from the poset recursion. Rows are
//! coordinate vectors in the diagram basis
//! `(1,1,1), (2,1,1), (1,2,1), (2,2,1), (3,2,1)`. Entries are transcribed
//! as printed; a matrix that does not reproduce its printed diagonal is
//! reported as a probable misprint, never patched.

use std::fmt;

use super::{change_of_basis, OrthoError};
use crate::diagrams::enumerate;
use crate::markov::{gram, SquareMatrix};
use crate::qpoly::{Polynomial, RationalFunction};

type Entry = (&'static [i64], &'static [i64]);

const O: Entry = (&[0], &[1]);
const I: Entry = (&[1], &[1]);
/// -1/q
const NEG_INV_Q: Entry = (&[-1], &[0, 1]);
/// 1/q^2
const INV_Q2: Entry = (&[1], &[0, 0, 1]);
/// 2/q^2
const TWO_INV_Q2: Entry = (&[2], &[0, 0, 1]);
/// -q/(q^2-1)
const NEG_Q_OVER: Entry = (&[0, -1], &[-1, 0, 1]);
/// q/(q^2-1)
const Q_OVER: Entry = (&[0, 1], &[-1, 0, 1]);
/// 1/(q^2-1)
const ONE_OVER: Entry = (&[1], &[-1, 0, 1]);

/// q^3
const D_Q3: Entry = (&[0, 0, 0, 1], &[1]);
/// (q-1) q (q+1)
const D_QQ: Entry = (&[0, -1, 0, 1], &[1]);
/// (q-1)^2 (q+1)^2 / q
const D_SQ: Entry = (&[1, 0, -2, 0, 1], &[0, 1]);
/// q (q^2-2)
const D_D3: Entry = (&[0, -2, 0, 1], &[1]);
/// (q-1) (q+1) (q^2-2) / q
const D_Y5: Entry = (&[2, 0, -3, 0, 1], &[0, 1]);

const Y_MATRIX: [[Entry; 5]; 5] = [
    [I, O, O, O, O],
    [NEG_INV_Q, O, I, O, O],
    [NEG_INV_Q, O, O, O, I],
    [NEG_INV_Q, I, O, O, O],
    [TWO_INV_Q2, NEG_INV_Q, NEG_INV_Q, I, NEG_INV_Q],
];
const Y_DIAGONAL: [Entry; 5] = [D_Q3, D_QQ, D_QQ, D_QQ, D_Y5];

const SAME_SIDE_MATRIX: [[Entry; 5]; 5] = [
    [I, O, O, O, O],
    [NEG_INV_Q, I, O, O, O],
    [NEG_INV_Q, O, I, O, O],
    [INV_Q2, NEG_INV_Q, NEG_INV_Q, I, O],
    [NEG_Q_OVER, ONE_OVER, ONE_OVER, NEG_Q_OVER, I],
];
const SAME_SIDE_DIAGONAL: [Entry; 5] = [D_Q3, D_QQ, D_QQ, D_SQ, D_D3];

const OPPOSITE_SIDE_MATRIX: [[Entry; 5]; 5] = [
    [O, O, I, O, O],
    [I, O, NEG_INV_Q, O, O],
    [O, O, NEG_INV_Q, I, O],
    [NEG_INV_Q, I, INV_Q2, NEG_INV_Q, O],
    [NEG_Q_OVER, ONE_OVER, ONE_OVER, Q_OVER, I],
];
const OPPOSITE_SIDE_DIAGONAL: [Entry; 5] = [D_Q3, D_QQ, D_QQ, D_SQ, D_D3];

const POSET_MATRIX: [[Entry; 5]; 5] = SAME_SIDE_MATRIX;
const POSET_DIAGONAL: [Entry; 5] = [D_Q3, D_QQ, D_QQ, D_SQ, D_D3];

fn entry((num, den): Entry) -> RationalFunction {
    RationalFunction::new(Polynomial::from_ints(num), Polynomial::from_ints(den))
        .expect("fixture denominators are nonzero")
}

fn matrix(rows: &[[Entry; 5]; 5]) -> SquareMatrix {
    let entries = rows
        .iter()
        .map(|r| r.iter().copied().map(entry).collect())
        .collect();
    SquareMatrix::new(enumerate(3), entries).expect("5x5 over the three-arc basis")
}

fn diagonal(d: &[Entry; 5]) -> Vec<RationalFunction> {
    d.iter().copied().map(entry).collect()
}

/// One published basis: its change-of-basis matrix and stated diagonal.
#[derive(Clone, Debug)]
pub struct FixtureConfiguration {
    pub name: &'static str,
    pub matrix: SquareMatrix,
    pub diagonal: Vec<RationalFunction>,
}

/// The Y, same-side and opposite-side configurations.
pub fn fixture_configurations() -> Vec<FixtureConfiguration> {
    vec![
        FixtureConfiguration {
            name: "Y",
            matrix: matrix(&Y_MATRIX),
            diagonal: diagonal(&Y_DIAGONAL),
        },
        FixtureConfiguration {
            name: "same side",
            matrix: matrix(&SAME_SIDE_MATRIX),
            diagonal: diagonal(&SAME_SIDE_DIAGONAL),
        },
        FixtureConfiguration {
            name: "opposite side",
            matrix: matrix(&OPPOSITE_SIDE_MATRIX),
            diagonal: diagonal(&OPPOSITE_SIDE_DIAGONAL),
        },
    ]
}

/// The published poset-recursion change of basis and diagonal for `n = 3`.
pub fn poset_recursion_fixture() -> (SquareMatrix, Vec<RationalFunction>) {
    (matrix(&POSET_MATRIX), diagonal(&POSET_DIAGONAL))
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixtureMismatch {
    /// 1-based row and column.
    pub row: usize,
    pub col: usize,
    pub expected: RationalFunction,
    pub actual: RationalFunction,
}

impl fmt::Display for FixtureMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}): expected {}, got {}",
            self.row, self.col, self.expected, self.actual
        )
    }
}

#[derive(Clone, Debug)]
pub struct FixtureResult {
    pub name: &'static str,
    /// Entries where `M·G·Mᵀ` differs from the stated diagonal matrix.
    pub mismatches: Vec<FixtureMismatch>,
    /// Single-entry sign flips of `M` that would reproduce the diagonal.
    pub sign_corrections: Vec<(usize, usize)>,
}

impl FixtureResult {
    /// A failing configuration is flagged as a probable erratum.
    pub fn erratum(&self) -> bool {
        !self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct FixtureReport {
    pub configurations: Vec<FixtureResult>,
    /// Entries where the same-side matrix differs from the computed `P`.
    pub same_side_vs_recursion: Vec<FixtureMismatch>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.configurations.iter().all(|c| !c.erratum()) && self.same_side_vs_recursion.is_empty()
    }

    pub fn failure_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in self.configurations.iter().filter(|c| c.erratum()) {
            out.push(format!(
                "{} configuration: M·G·Mᵀ differs from the printed diagonal (possible erratum)",
                c.name
            ));
            for m in &c.mismatches {
                out.push(format!("{} {m}", c.name));
            }
            for (r, k) in &c.sign_corrections {
                out.push(format!(
                    "{} configuration: flipping the sign of entry ({r},{k}) reproduces the diagonal",
                    c.name
                ));
            }
        }
        for m in &self.same_side_vs_recursion {
            out.push(format!("same-side matrix vs computed P {m}"));
        }
        out
    }
}

fn diagonal_mismatches(
    m: &SquareMatrix,
    g: &SquareMatrix,
    diag: &[RationalFunction],
) -> Result<Vec<FixtureMismatch>, OrthoError> {
    let prod = m.mul(g)?.mul(&m.transpose())?;
    let mut out = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        for j in 0..prod.dim() {
            let expected = if i == j {
                d.clone()
            } else {
                RationalFunction::zero()
            };
            if *prod.entry(i, j) != expected {
                out.push(FixtureMismatch {
                    row: i + 1,
                    col: j + 1,
                    expected,
                    actual: prod.entry(i, j).clone(),
                });
            }
        }
    }
    Ok(out)
}

fn sign_corrections(
    m: &SquareMatrix,
    g: &SquareMatrix,
    diag: &[RationalFunction],
) -> Result<Vec<(usize, usize)>, OrthoError> {
    let mut out = Vec::new();
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            if m.entry(i, j).is_zero() {
                continue;
            }
            let mut entries = m.entries().to_vec();
            entries[i][j] = -&entries[i][j];
            let flipped = SquareMatrix::new(m.basis().to_vec(), entries)?;
            if diagonal_mismatches(&flipped, g, diag)?.is_empty() {
                out.push((i + 1, j + 1));
            }
        }
    }
    Ok(out)
}

/// Checks `M·G₃·Mᵀ` against each stated diagonal, and the same-side matrix
/// against the computed change of basis.
pub fn check_fixture_bases() -> Result<FixtureReport, OrthoError> {
    let g = gram(3);
    let mut configurations = Vec::new();
    for cfg in fixture_configurations() {
        let mismatches = diagonal_mismatches(&cfg.matrix, &g, &cfg.diagonal)?;
        let corrections = if mismatches.is_empty() {
            Vec::new()
        } else {
            sign_corrections(&cfg.matrix, &g, &cfg.diagonal)?
        };
        configurations.push(FixtureResult {
            name: cfg.name,
            mismatches,
            sign_corrections: corrections,
        });
    }

    let p = change_of_basis(3)?.p;
    let same_side = matrix(&SAME_SIDE_MATRIX);
    let mut same_side_vs_recursion = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            if p.entry(i, j) != same_side.entry(i, j) {
                same_side_vs_recursion.push(FixtureMismatch {
                    row: i + 1,
                    col: j + 1,
                    expected: same_side.entry(i, j).clone(),
                    actual: p.entry(i, j).clone(),
                });
            }
        }
    }
    Ok(FixtureReport {
        configurations,
        same_side_vs_recursion,
    })
}
