//! Fraction-free (Bareiss) determinants of polynomial matrices.
//!
//! Rows are scaled to integer coefficients first, so elimination runs over
//! ℤ[q] and every division is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::OrthoError;
use crate::diagrams::enumerate;
use crate::markov::SquareMatrix;
use crate::qpoly::{chebyshev, Polynomial, RationalFunction};

/// Dense ascending integer polynomial, trimmed.
#[derive(Clone, Debug, PartialEq)]
struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ZPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        ZPoly(out).trim()
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let out = (0..len)
            .map(|i| {
                let a = self.0.get(i).cloned().unwrap_or_default();
                match other.0.get(i) {
                    Some(b) => a - b,
                    None => a,
                }
            })
            .collect();
        ZPoly(out).trim()
    }

    /// Quotient of an exact division; `None` if it leaves a remainder.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.0.len() == 1 && d.0[0].is_one() {
            return Some(self.clone());
        }
        let dd = d.0.len().checked_sub(1)?;
        if self.is_zero() {
            return Some(self.clone());
        }
        let nd = self.0.len() - 1;
        if nd < dd {
            return None;
        }
        let lc = &d.0[dd];
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let (c, r) = rem[i + dd].div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            if c.is_zero() {
                continue;
            }
            for (j, x) in d.0.iter().enumerate() {
                if !x.is_zero() {
                    rem[i + j] -= &c * x;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(ZPoly(quot).trim())
    }
}

/// Scales a row of rational polynomials to integer polynomials, returning
/// the scale factor.
fn integer_row(row: &[Polynomial]) -> (Vec<ZPoly>, BigInt) {
    let scale = row
        .iter()
        .flat_map(|p| p.coeffs())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale_r = BigRational::from_integer(scale.clone());
    let out = row
        .iter()
        .map(|p| {
            ZPoly(
                p.coeffs()
                    .iter()
                    .map(|c| (c * &scale_r).to_integer())
                    .collect(),
            )
            .trim()
        })
        .collect();
    (out, scale)
}

/// Exact determinant of a square polynomial matrix by fraction-free
/// elimination with row pivoting.
pub fn bareiss_det(rows: &[Vec<Polynomial>]) -> Result<Polynomial, OrthoError> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(OrthoError::NonSquare {
            rows: n,
            cols: bad.len(),
        });
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<ZPoly>> = rows
        .iter()
        .map(|r| {
            let (zr, s) = integer_row(r);
            scale *= s;
            zr
        })
        .collect();

    let mut negate = false;
    let mut prev = ZPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Polynomial::zero());
            };
            m.swap(k, pivot);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let t = pivot_row[k].mul(&row[j]).sub(&row[k].mul(&pivot_row[j]));
                row[j] = t.exact_div(&prev).ok_or_else(|| {
                    OrthoError::Internal(format!("Bareiss division left a remainder at step {k}"))
                })?;
            }
            row[k] = ZPoly(Vec::new());
        }
        prev = m[k][k].clone();
    }

    let det = &m[n - 1][n - 1];
    let mut factor = BigRational::new(BigInt::one(), scale);
    if negate {
        factor = -factor;
    }
    let coeffs = det
        .0
        .iter()
        .map(|c| BigRational::from_integer(c.clone()) * &factor)
        .collect();
    Ok(Polynomial::from_coeffs(coeffs))
}

/// [`bareiss_det`] on a matrix whose entries are all polynomials.
pub fn bareiss_det_matrix(m: &SquareMatrix) -> Result<Polynomial, OrthoError> {
    let rows = m
        .entries()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, c)| {
                    if c.is_polynomial() {
                        Ok(c.num().clone())
                    } else {
                        Err(OrthoError::NotPolynomial { row: i, col: j })
                    }
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    bareiss_det(&rows)
}

/// Net exponent of each `Δ_k` in the product of the predicted diagonal over
/// `enumerate(n)`; index `k` runs over `0..=n`.
pub fn det_exponents(n: usize) -> Vec<i64> {
    let mut e = vec![0i64; n + 1];
    for s in enumerate(n) {
        for &a in s.entries() {
            e[a as usize] += 1;
            e[a as usize - 1] -= 1;
        }
    }
    e
}

/// Product of the predicted diagonal over `enumerate(n)`: the Gram
/// determinant, since the change of basis is unitriangular.
pub fn det_product(n: usize) -> Result<RationalFunction, OrthoError> {
    if n == 0 {
        return Err(OrthoError::EmptyDiagram);
    }
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for (k, &e) in det_exponents(n).iter().enumerate().skip(1) {
        let d = chebyshev(k as i64)?;
        let target = if e >= 0 { &mut num } else { &mut den };
        for _ in 0..e.unsigned_abs() {
            *target = &*target * &d;
        }
    }
    Ok(RationalFunction::new(num, den)?)
}
