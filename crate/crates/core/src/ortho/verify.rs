//! Exact verification of the diagonalization.
//!
//! The pairings `⟨e_γ, e'_α⟩` and `⟨e'_β, e'_α⟩` are computed with each row
//! of `P` put over a common denominator, so the inner sums are plain
//! polynomial additions and products. Every reported entry is reduced to
//! normal form before it is compared.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{build_basis, det_product, OrthoBasis, OrthoError};
use super::{bareiss_det_matrix, check_fixture_bases};
use crate::diagrams::RestrictedSequence;
use crate::markov::{gram, gram_exponents, SquareMatrix};
use crate::qpoly::{Polynomial, RationalFunction};

/// One named check and what went wrong, if anything.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckOutcome {
    fn new(name: &str, detail: String, failures: Vec<String>, elapsed: Duration) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: failures.is_empty(),
            detail,
            failures,
            elapsed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
    /// Computed `⟨e'_α, e'_α⟩` in basis order.
    pub diagonal: Vec<RationalFunction>,
}

impl VerificationReport {
    fn push(&mut self, check: CheckOutcome) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Deterministic text rendering (no timings).
    pub fn render_text(&self) -> String {
        let mut out = format!("verify n={}\n", self.n);
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
            for f in &c.failures {
                let _ = writeln!(out, "  - {f}");
            }
        }
        let _ = writeln!(
            out,
            "result: {} ({} checks, {} failed)",
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.failure_count()
        );
        out
    }

    pub fn render_timings(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}: {:.3} s", c.name, c.elapsed.as_secs_f64());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Also compare the diagonal product with a fraction-free determinant.
    pub det_oracle: bool,
}

/// The pairing in the new basis.
#[derive(Clone, Debug)]
pub struct OrthoGram {
    pub basis: Vec<RestrictedSequence>,
    /// `half[α][γ] = ⟨e_γ, e'_α⟩`.
    pub half: Vec<Vec<RationalFunction>>,
    /// `full[β][α] = ⟨e'_β, e'_α⟩`.
    pub full: SquareMatrix,
}

struct CommonRow {
    den: Polynomial,
    terms: Vec<(usize, Vec<BigRational>)>,
}

fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a == b || b.is_one() {
        return a.clone();
    }
    if a.is_one() {
        return b.clone();
    }
    let g = a.gcd(b).expect("nonzero denominators");
    a * &b.exact_div(&g)
}

fn common_rows(p: &SquareMatrix) -> Vec<CommonRow> {
    (0..p.dim())
        .map(|i| {
            let row = &p.entries()[i];
            let den = row
                .iter()
                .filter(|c| !c.is_zero())
                .fold(Polynomial::one(), |acc, c| lcm(&acc, c.den()));
            let terms = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| {
                    let scaled = c.num() * &den.exact_div(c.den());
                    (j, scaled.coeffs().to_vec())
                })
                .collect();
            CommonRow { den, terms }
        })
        .collect()
}

fn add_shifted(acc: &mut Vec<BigRational>, src: &[BigRational], shift: usize) {
    if acc.len() < src.len() + shift {
        acc.resize(src.len() + shift, BigRational::zero());
    }
    for (i, c) in src.iter().enumerate() {
        if !c.is_zero() {
            acc[i + shift] += c;
        }
    }
}

fn add_product(acc: &mut Vec<BigRational>, a: &[BigRational], b: &[BigRational]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    if acc.len() < a.len() + b.len() - 1 {
        acc.resize(a.len() + b.len() - 1, BigRational::zero());
    }
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
}

fn trimmed(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Computes `⟨e_γ, e'_α⟩` and `⟨e'_β, e'_α⟩` for every pair, exactly.
///
/// The full matrix is filled on `β <= α` and mirrored, the pairing being
/// symmetric.
pub fn orthogonal_gram(ob: &OrthoBasis) -> OrthoGram {
    let dim = ob.basis.len();
    let exps = gram_exponents(&ob.basis);
    let rows = common_rows(&ob.p);

    // half_num[α][γ] / rows[α].den = ⟨e_γ, e'_α⟩
    let half_num: Vec<Vec<Vec<BigRational>>> = rows
        .iter()
        .map(|row| {
            (0..dim)
                .map(|g| {
                    let mut acc = Vec::new();
                    for (d, m) in &row.terms {
                        add_shifted(&mut acc, m, exps[g][*d] as usize);
                    }
                    trimmed(acc)
                })
                .collect()
        })
        .collect();

    let half = half_num
        .iter()
        .zip(&rows)
        .map(|(nums, row)| {
            nums.iter()
                .map(|n| {
                    RationalFunction::new(Polynomial::from_coeffs(n.clone()), row.den.clone())
                        .expect("nonzero denominator")
                })
                .collect()
        })
        .collect();

    let mut full = vec![vec![RationalFunction::zero(); dim]; dim];
    for b in 0..dim {
        for a in b..dim {
            let mut acc = Vec::new();
            for (g, m) in &rows[b].terms {
                add_product(&mut acc, m, &half_num[a][*g]);
            }
            let acc = trimmed(acc);
            if acc.is_empty() {
                continue;
            }
            let v = RationalFunction::new(Polynomial::from_coeffs(acc), &rows[b].den * &rows[a].den)
                .expect("nonzero denominator");
            full[a][b] = v.clone();
            full[b][a] = v;
        }
    }
    OrthoGram {
        basis: ob.basis.clone(),
        half,
        full: SquareMatrix::new(ob.basis.clone(), full).expect("square"),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

/// Runs the orthogonality checks for size `n`: unitriangularity, downset
/// support, orthogonality, the diagonal formula, and the half pairing
/// `⟨e_β, e'_α⟩` (zero before `α` in basis order, the diagonal value at `α`).
pub fn verify_orthogonality(n: usize) -> Result<VerificationReport, OrthoError> {
    let (ob, build_time) = timed(|| build_basis(n));
    let ob = ob?;
    let dim = ob.basis.len();
    let mut report = VerificationReport {
        n,
        passed: true,
        checks: Vec::new(),
        diagonal: Vec::new(),
    };

    let fails = ob.unitriangularity_failures();
    report.push(CheckOutcome::new(
        "unitriangularity",
        format!("P[a][a] = 1 for all {dim} diagonal entries"),
        fails,
        build_time,
    ));

    let (fails, t) = timed(|| ob.downset_failures());
    let zeros = ob.downset_zeros().len();
    report.push(CheckOutcome::new(
        "downset support",
        format!("row support of P within the downset; {zeros} zero coefficients inside downsets"),
        fails,
        t,
    ));

    let (og, gram_time) = timed(|| orthogonal_gram(&ob));

    let mut fails = Vec::new();
    for b in 0..dim {
        for a in b + 1..dim {
            let v = og.full.entry(b, a);
            if !v.is_zero() {
                fails.push(format!(
                    "<e'{}, e'{}> = {v}, expected 0",
                    ob.basis[b].label(),
                    ob.basis[a].label()
                ));
            }
        }
    }
    report.push(CheckOutcome::new(
        "orthogonality",
        format!("<e'_b, e'_a> = 0 for all {} off-diagonal pairs", dim * (dim - 1) / 2),
        fails,
        gram_time,
    ));

    let (fails, t) = timed(|| {
        let mut fails = Vec::new();
        for (i, s) in ob.basis.iter().enumerate() {
            let got = og.full.entry(i, i);
            if *got != ob.diagonal[i] {
                fails.push(format!(
                    "<e'{0}, e'{0}> = {got}, predicted {1}",
                    s.label(),
                    ob.diagonal[i]
                ));
            }
        }
        fails
    });
    report.push(CheckOutcome::new(
        "diagonal formula",
        format!("<e'_a, e'_a> against the Chebyshev quotient product for {dim} entries"),
        fails,
        t,
    ));

    let (fails, t) = timed(|| {
        let mut fails = Vec::new();
        for (a, s) in ob.basis.iter().enumerate() {
            if og.half[a][a] != ob.diagonal[a] {
                fails.push(format!(
                    "<e{0}, e'{0}> = {1}, predicted {2}",
                    s.label(),
                    og.half[a][a],
                    ob.diagonal[a]
                ));
            }
            for g in 0..a {
                if !og.half[a][g].is_zero() {
                    fails.push(format!(
                        "<e{}, e'{}> = {}, expected 0",
                        ob.basis[g].label(),
                        s.label(),
                        og.half[a][g]
                    ));
                }
            }
        }
        fails
    });
    report.push(CheckOutcome::new(
        "half pairing",
        "<e_b, e'_a> = 0 for b before a, the diagonal value for b = a".into(),
        fails,
        t,
    ));

    report.diagonal = (0..dim).map(|i| og.full.entry(i, i).clone()).collect();
    Ok(report)
}

/// [`verify_orthogonality`] plus the printed-matrix fixtures (for `n = 3`)
/// and, when requested, the determinant oracle.
pub fn verify(n: usize, opts: VerifyOptions) -> Result<VerificationReport, OrthoError> {
    let mut report = verify_orthogonality(n)?;

    if n == 3 {
        let (fixtures, t) = timed(check_fixture_bases);
        let fixtures = fixtures?;
        report.push(CheckOutcome::new(
            "fixture matrices",
            format!(
                "M·G·Mᵀ against the printed diagonal for {} configurations; same-side matrix against P",
                fixtures.configurations.len()
            ),
            fixtures.failure_lines(),
            t,
        ));
    }

    if opts.det_oracle {
        let (res, t) = timed(|| -> Result<Vec<String>, OrthoError> {
            let product = det_product(n)?;
            let det = bareiss_det_matrix(&gram(n))?;
            let mut fails = Vec::new();
            if !product.is_polynomial() {
                fails.push(format!("diagonal product {product} is not a polynomial"));
            }
            if RationalFunction::from(det.clone()) != product {
                fails.push(format!("Bareiss determinant {det} differs from product {product}"));
            }
            Ok(fails)
        });
        report.push(CheckOutcome::new(
            "determinant oracle",
            "fraction-free determinant of the Gram matrix against the diagonal product".into(),
            res?,
            t,
        ));
    }
    Ok(report)
}
