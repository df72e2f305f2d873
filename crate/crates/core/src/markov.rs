//! The Markov pairing on chord diagrams and its bilinear extension.
//!
//! Two diagrams on the same `2n` points are glued along the axis (one of
//! them mirrored); the pairing is `q^c` where `c` counts the closed curves.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagrams::{enumerate, DiagramError, Matching, RestrictedSequence};
use crate::qpoly::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkovError {
    #[error("diagram sizes differ ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("diagram {0} is not in the matrix basis")]
    BasisMismatch(String),
    #[error("matrix shape is not {0}x{0}")]
    Shape(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// The pairing value `q^c`, stored as its exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairingValue(pub u32);

impl PairingValue {
    pub fn exponent(self) -> u32 {
        self.0
    }

    pub fn to_ratfun(self) -> RationalFunction {
        RationalFunction::q_pow(self.0 as usize)
    }
}

impl fmt::Display for PairingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "q"),
            c => write!(f, "q^{c}"),
        }
    }
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Counts the circles of `a ∪ b`: components of the 2-regular multigraph
/// on the `2n` points whose edges are the arcs of both diagrams.
pub fn pair_diagrams(a: &Matching, b: &Matching) -> Result<PairingValue, MarkovError> {
    if a.size() != b.size() {
        return Err(MarkovError::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    let points = a.points();
    let mut dsu = DisjointSet::new(points);
    let mut components = points;
    for m in [a, b] {
        for (i, &p) in m.partners0().iter().enumerate() {
            if p > i && dsu.union(i, p) {
                components -= 1;
            }
        }
    }
    Ok(PairingValue(components as u32))
}

/// Pairing exponents for every ordered pair of `basis`. Only the upper
/// triangle is computed; the rest is mirrored.
pub fn gram_exponents(basis: &[RestrictedSequence]) -> Vec<Vec<u32>> {
    let matchings: Vec<Matching> = basis.iter().map(RestrictedSequence::to_matching).collect();
    let len = basis.len();
    let mut out = vec![vec![0; len]; len];
    for i in 0..len {
        for j in i..len {
            let c = pair_diagrams(&matchings[i], &matchings[j])
                .expect("basis diagrams share a size")
                .0;
            out[i][j] = c;
            out[j][i] = c;
        }
    }
    out
}

/// The Gram matrix of the pairing over `enumerate(n)`.
pub fn gram(n: usize) -> SquareMatrix {
    let basis = enumerate(n);
    let entries = gram_exponents(&basis)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| RationalFunction::q_pow(c as usize))
                .collect()
        })
        .collect();
    SquareMatrix::new(basis, entries).expect("square by construction")
}

/// A sparse element of `V_n`: diagram → coefficient, zeros never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramVector {
    size: usize,
    coeffs: BTreeMap<RestrictedSequence, RationalFunction>,
}

impl DiagramVector {
    pub fn zero(size: usize) -> Self {
        DiagramVector {
            size,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector `e_s`.
    pub fn basis(s: RestrictedSequence) -> Self {
        let size = s.len();
        DiagramVector {
            size,
            coeffs: BTreeMap::from([(s, RationalFunction::one())]),
        }
    }

    pub fn from_terms<I>(size: usize, terms: I) -> Result<Self, MarkovError>
    where
        I: IntoIterator<Item = (RestrictedSequence, RationalFunction)>,
    {
        let mut v = Self::zero(size);
        for (s, c) in terms {
            v.add_term(s, &c)?;
        }
        Ok(v)
    }

    /// Number of arcs of every diagram in the support.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn get(&self, s: &RestrictedSequence) -> Option<&RationalFunction> {
        self.coeffs.get(s)
    }

    /// Coefficient of `e_s`, zero when absent.
    pub fn coeff(&self, s: &RestrictedSequence) -> RationalFunction {
        self.get(s).cloned().unwrap_or_default()
    }

    /// Terms in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&RestrictedSequence, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, s: RestrictedSequence, c: &RationalFunction) -> Result<(), MarkovError> {
        if s.len() != self.size {
            return Err(MarkovError::SizeMismatch {
                left: self.size,
                right: s.len(),
            });
        }
        self.add_term_unchecked(s, c);
        Ok(())
    }

    fn add_term_unchecked(&mut self, s: RestrictedSequence, c: &RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&s) {
            Some(cur) => {
                let next = &*cur + c;
                if next.is_zero() {
                    self.coeffs.remove(&s);
                } else {
                    *cur = next;
                }
            }
            None => {
                self.coeffs.insert(s, c.clone());
            }
        }
    }

    fn check_size(&self, other: &Self) -> Result<(), MarkovError> {
        if self.size != other.size {
            return Err(MarkovError::SizeMismatch {
                left: self.size,
                right: other.size,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MarkovError> {
        self.check_size(other)?;
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term_unchecked(s.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MarkovError> {
        self.add(&other.scale(&-RationalFunction::one()))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.size);
        }
        DiagramVector {
            size: self.size,
            coeffs: self.coeffs.iter().map(|(s, x)| (s.clone(), x * c)).collect(),
        }
    }

    /// `l_k` extended linearly. Each term goes through its matching and is
    /// renamed by its new restricted sequence.
    pub fn insert_arc(&self, k: usize) -> Result<Self, MarkovError> {
        let mut out = Self::zero(self.size + 1);
        let max = 2 * self.size + 1;
        if k == 0 || k > max {
            return Err(DiagramError::InsertOutOfRange { k, max }.into());
        }
        for (s, c) in &self.coeffs {
            let lifted = s.to_matching().insert_arc(k)?.to_sequence();
            out.add_term_unchecked(lifted, c);
        }
        Ok(out)
    }
}

impl fmt::Display for DiagramVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "e{}", s.label())?;
            } else {
                write!(f, "({c})*e{}", s.label())?;
            }
        }
        Ok(())
    }
}

/// A square matrix over ℚ(q) indexed by an ordered diagram basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    basis: Vec<RestrictedSequence>,
    index: HashMap<RestrictedSequence, usize>,
    entries: Vec<Vec<RationalFunction>>,
}

impl SquareMatrix {
    pub fn new(
        basis: Vec<RestrictedSequence>,
        entries: Vec<Vec<RationalFunction>>,
    ) -> Result<Self, MarkovError> {
        let dim = basis.len();
        if entries.len() != dim || entries.iter().any(|r| r.len() != dim) {
            return Err(MarkovError::Shape(dim));
        }
        let index = basis.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(SquareMatrix {
            basis,
            index,
            entries,
        })
    }

    /// Stacks coordinate vectors as rows.
    pub fn from_rows(basis: Vec<RestrictedSequence>, rows: &[DiagramVector]) -> Result<Self, MarkovError> {
        let dim = basis.len();
        if rows.len() != dim {
            return Err(MarkovError::Shape(dim));
        }
        let mut m = SquareMatrix::new(basis, vec![vec![RationalFunction::zero(); dim]; dim])?;
        for (i, row) in rows.iter().enumerate() {
            for (s, c) in row.iter() {
                let j = m.index_of(s)?;
                m.entries[i][j] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn identity(basis: Vec<RestrictedSequence>) -> Self {
        let dim = basis.len();
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { RationalFunction::one() } else { RationalFunction::zero() })
                    .collect()
            })
            .collect();
        SquareMatrix::new(basis, entries).expect("square")
    }

    pub fn basis(&self) -> &[RestrictedSequence] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<RationalFunction>] {
        &self.entries
    }

    pub fn index_of(&self, s: &RestrictedSequence) -> Result<usize, MarkovError> {
        self.index
            .get(s)
            .copied()
            .ok_or_else(|| MarkovError::BasisMismatch(s.label()))
    }

    pub fn row_vector(&self, i: usize) -> DiagramVector {
        let size = self.basis.first().map_or(0, RestrictedSequence::len);
        let mut v = DiagramVector::zero(size);
        for (j, c) in self.entries[i].iter().enumerate() {
            v.add_term_unchecked(self.basis[j].clone(), c);
        }
        v
    }

    pub fn transpose(&self) -> Self {
        let dim = self.dim();
        let entries = (0..dim)
            .map(|i| (0..dim).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        SquareMatrix::new(self.basis.clone(), entries).expect("square")
    }

    /// Exact product; both factors must share a basis.
    pub fn mul(&self, other: &Self) -> Result<Self, MarkovError> {
        if self.basis != other.basis {
            return Err(MarkovError::BasisMismatch("matrix bases differ".into()));
        }
        let dim = self.dim();
        let mut entries = vec![vec![RationalFunction::zero(); dim]; dim];
        for (i, row) in entries.iter_mut().enumerate() {
            for (k, a) in self.entries[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, out) in row.iter_mut().enumerate() {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        *out = &*out + &(a * b);
                    }
                }
            }
        }
        SquareMatrix::new(self.basis.clone(), entries)
    }

    pub fn is_symmetric(&self) -> bool {
        let dim = self.dim();
        (0..dim).all(|i| (i + 1..dim).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            basis: self.basis.clone(),
            entries: self.entries.clone(),
            n: self.basis.first().map_or(0, RestrictedSequence::len),
        }
    }

    /// CSV with a header row of diagram labels and rendered entries.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("basis");
        for s in &self.basis {
            out.push(',');
            out.push_str(&csv_field(&s.label()));
        }
        out.push('\n');
        for (s, row) in self.basis.iter().zip(&self.entries) {
            out.push_str(&csv_field(&s.label()));
            for c in row {
                out.push(',');
                out.push_str(&csv_field(&c.to_string()));
            }
            out.push('\n');
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// JSON form of a diagram-indexed matrix. Fields are declared in sorted
/// order so the encoding is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub basis: Vec<RestrictedSequence>,
    pub entries: Vec<Vec<RationalFunction>>,
    pub n: usize,
}

impl TryFrom<MatrixJson> for SquareMatrix {
    type Error = MarkovError;
    fn try_from(j: MatrixJson) -> Result<Self, MarkovError> {
        if let Some(s) = j.basis.iter().find(|s| s.len() != j.n) {
            return Err(MarkovError::SizeMismatch {
                left: j.n,
                right: s.len(),
            });
        }
        SquareMatrix::new(j.basis, j.entries)
    }
}

/// `Σ v[α]·w[β]·G[α][β]`.
pub fn pair_vectors(
    v: &DiagramVector,
    w: &DiagramVector,
    gram: &SquareMatrix,
) -> Result<RationalFunction, MarkovError> {
    v.check_size(w)?;
    let mut acc = RationalFunction::zero();
    for (a, ca) in v.iter() {
        let i = gram.index_of(a)?;
        for (b, cb) in w.iter() {
            let j = gram.index_of(b)?;
            acc = &acc + &(&(ca * cb) * gram.entry(i, j));
        }
    }
    Ok(acc)
}
