//! The orthogonal basis `e'_α`, built by a recursion on the number of arcs
//! and, inside each size, downward along the coordinate-wise order:
//!
//! ```text
//! e'_(1)               = e_(1)
//! e'_(1, a_{n-1}, …)   = l_1(e'_(a_{n-1}, …))
//! e'_(a_n, a_{n-1}, …) = l_{a_n}(e'_(a_{n-1}, …)) − Δ_{a_n−2}/Δ_{a_n−1} · e'_(a_n − 1, a_{n-1}, …)
//! ```
//!
//! In the diagram basis the change of basis is unitriangular and each row
//! is supported on the downset of its diagram. The pairing is diagonal in
//! the new basis, with `⟨e'_α, e'_α⟩ = Π_i Δ_{a_i} / Δ_{a_i − 1}`.

mod determinant;
mod fixtures;
mod verify;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagrams::{enumerate, leq_unchecked, DiagramError, RestrictedSequence};
use crate::markov::{DiagramVector, MarkovError, SquareMatrix};
use crate::qpoly::{chebyshev, chebyshev_quotient, QpolyError, RationalFunction};

pub use determinant::{bareiss_det, bareiss_det_matrix, det_exponents, det_product};
pub use fixtures::{
    check_fixture_bases, fixture_configurations, poset_recursion_fixture, FixtureConfiguration,
    FixtureMismatch, FixtureReport, FixtureResult,
};
pub use verify::{
    verify, verify_orthogonality, CheckOutcome, OrthoGram, VerificationReport, VerifyOptions,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrthoError {
    #[error("the orthogonal basis is defined for n >= 1")]
    EmptyDiagram,
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("entry ({row},{col}) is not a polynomial")]
    NotPolynomial { row: usize, col: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Markov(#[from] MarkovError),
    #[error(transparent)]
    Qpoly(#[from] QpolyError),
}

/// Memoized construction of `e'_α`.
///
/// Each key is computed once; later requests clone the stored vector.
#[derive(Debug, Default)]
pub struct OrthoBuilder {
    memo: HashMap<RestrictedSequence, DiagramVector>,
}

impl OrthoBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn orthogonal_vector(&mut self, s: &RestrictedSequence) -> Result<DiagramVector, OrthoError> {
        if let Some(v) = self.memo.get(s) {
            return Ok(v.clone());
        }
        let lead = s.leading().ok_or(OrthoError::EmptyDiagram)?;
        let v = if s.len() == 1 {
            DiagramVector::basis(s.clone())
        } else {
            let lifted = self.orthogonal_vector(&s.tail())?.insert_arc(lead as usize)?;
            if lead == 1 {
                lifted
            } else {
                let lower = s.with_leading(lead - 1).ok_or_else(|| {
                    OrthoError::Internal(format!("lowering a_n of {} is not restricted", s.label()))
                })?;
                let a = i64::from(lead);
                let coeff = RationalFunction::new(chebyshev(a - 2)?, chebyshev(a - 1)?)?;
                lifted.sub(&self.orthogonal_vector(&lower)?.scale(&coeff))?
            }
        };
        self.memo.insert(s.clone(), v.clone());
        Ok(v)
    }

    /// Number of memoized vectors.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// `e'_s` in the diagram basis.
pub fn orthogonal_vector(s: &RestrictedSequence) -> Result<DiagramVector, OrthoError> {
    OrthoBuilder::new().orthogonal_vector(s)
}

/// `Π_i Δ_{a_i} / Δ_{a_i − 1}`.
pub fn predicted_diagonal(s: &RestrictedSequence) -> RationalFunction {
    s.entries().iter().fold(RationalFunction::one(), |acc, &a| {
        let factor = chebyshev_quotient(i64::from(a)).expect("restricted entries are positive");
        &acc * &factor
    })
}

/// The change of basis to `{e'_α}` together with the predicted diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoBasis {
    pub n: usize,
    pub basis: Vec<RestrictedSequence>,
    /// Row `α` holds the coordinates of `e'_α`.
    pub p: SquareMatrix,
    pub diagonal: Vec<RationalFunction>,
}

impl OrthoBasis {
    pub fn to_json(&self) -> OrthoJson {
        OrthoJson {
            p: self.p.entries().to_vec(),
            basis: self.basis.clone(),
            diagonal: self.diagonal.clone(),
            n: self.n,
        }
    }

    /// Diagonal positions of `P` that are not 1.
    pub fn unitriangularity_failures(&self) -> Vec<String> {
        (0..self.basis.len())
            .filter(|&i| !self.p.entry(i, i).is_one())
            .map(|i| {
                format!(
                    "P[{0}][{0}] = {1}, expected 1",
                    self.basis[i].label(),
                    self.p.entry(i, i)
                )
            })
            .collect()
    }

    /// Nonzero entries `P[α][β]` with `β ⋠ α`.
    pub fn downset_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                let c = self.p.entry(i, j);
                if !c.is_zero() && !leq_unchecked(b, a) {
                    out.push(format!("P[{}][{}] = {c} outside the downset", a.label(), b.label()));
                }
            }
        }
        out
    }

    /// Entries `P[α][β]` with `β ⪯ α` that vanish. The support claim only
    /// needs containment, so these are reported rather than treated as errors.
    pub fn downset_zeros(&self) -> Vec<(RestrictedSequence, RestrictedSequence)> {
        let mut out = Vec::new();
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                if leq_unchecked(b, a) && self.p.entry(i, j).is_zero() {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        out
    }
}

/// JSON form of [`OrthoBasis`], fields in sorted key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrthoJson {
    #[serde(rename = "P")]
    pub p: Vec<Vec<RationalFunction>>,
    pub basis: Vec<RestrictedSequence>,
    pub diagonal: Vec<RationalFunction>,
    pub n: usize,
}

pub(crate) fn build_basis(n: usize) -> Result<OrthoBasis, OrthoError> {
    if n == 0 {
        return Err(OrthoError::EmptyDiagram);
    }
    let basis = enumerate(n);
    let mut builder = OrthoBuilder::new();
    let rows = basis
        .iter()
        .map(|s| builder.orthogonal_vector(s))
        .collect::<Result<Vec<_>, _>>()?;
    let p = SquareMatrix::from_rows(basis.clone(), &rows)?;
    let diagonal = basis.iter().map(predicted_diagonal).collect();
    Ok(OrthoBasis {
        n,
        basis,
        p,
        diagonal,
    })
}

/// Stacks `e'_α` over `enumerate(n)` and checks the triangular structure.
pub fn change_of_basis(n: usize) -> Result<OrthoBasis, OrthoError> {
    let ob = build_basis(n)?;
    let mut bad = ob.unitriangularity_failures();
    bad.extend(ob.downset_failures());
    if let Some(first) = bad.first() {
        return Err(OrthoError::Internal(first.clone()));
    }
    Ok(ob)
}
