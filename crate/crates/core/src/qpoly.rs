//! Exact univariate polynomials over ℚ, the rational function field ℚ(q),
//! and the Chebyshev family Δ_k.
//!
//! Polynomials are dense and ascending: `coeffs[i]` is the coefficient of
//! `q^i`, with no trailing zeros. Rational functions are kept fully reduced
//! with a monic denominator, so two equal values are always structurally
//! equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default pole tolerance for floating point evaluation of rational functions.
pub const DEFAULT_POLE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QpolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("Chebyshev index {0} is below -1")]
    ChebyshevIndex(i64),
    #[error("pole at the evaluation point (|den(q0)| = {magnitude:e})")]
    Pole { magnitude: f64 },
    #[error("malformed number {0:?}")]
    MalformedNumber(String),
}

/// Parses an exact rational written as `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Result<BigRational, QpolyError> {
    let t = s.trim();
    if t.is_empty() || t.contains('.') {
        return Err(QpolyError::MalformedNumber(s.to_string()));
    }
    BigRational::from_str(t).map_err(|_| QpolyError::MalformedNumber(s.to_string()))
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial in `q` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolynomialRepr", into = "PolynomialRepr")]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^degree`.
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// Ascending integer coefficients, mostly for tests and fixtures.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Divides through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = divisor * quotient + remainder` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), QpolyError> {
        let dd = divisor.degree().ok_or(QpolyError::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact.
    pub(crate) fn exact_div(&self, divisor: &Self) -> Self {
        if divisor.is_one() {
            return self.clone();
        }
        let (quot, rem) = self.div_rem(divisor).expect("exact_div by zero");
        debug_assert!(rem.is_zero(), "exact_div left a remainder");
        quot
    }

    /// Monic greatest common divisor by the Euclidean remainder sequence.
    pub fn gcd(&self, other: &Self) -> Result<Self, QpolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(QpolyError::GcdOfZeros);
        }
        if self.is_unit() || other.is_unit() {
            return Ok(Self::one());
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Double precision Horner evaluation.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x + c.to_f64().unwrap_or(f64::NAN)
        })
    }

    pub fn eval_at(&self, x: &Scalar) -> Scalar {
        match x {
            Scalar::Exact(r) => Scalar::Exact(self.eval(r)),
            Scalar::Float(f) => Scalar::Float(self.eval_f64(*f)),
        }
    }
}

impl From<BigRational> for Polynomial {
    fn from(c: BigRational) -> Self {
        Polynomial::constant(c)
    }
}

fn add_coeffs(a: &[BigRational], b: &[BigRational], negate_b: bool) -> Polynomial {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.get(i);
        let y = b.get(i);
        let v = match (x, y) {
            (Some(x), Some(y)) if negate_b => x - y,
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) if negate_b => -y,
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    Polynomial::from_coeffs(out)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binops {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { self.$m(&rhs) }
        }
    )*};
}

forward_owned_binops!(Polynomial, Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Writes `magnitude*q^k` for one term, without the sign.
fn write_term(f: &mut fmt::Formatter<'_>, magnitude: &BigRational, k: usize) -> fmt::Result {
    if k == 0 {
        return write!(f, "{magnitude}");
    }
    if !magnitude.is_one() {
        write!(f, "{magnitude}*")?;
    }
    match k {
        1 => write!(f, "q"),
        _ => write!(f, "q^{k}"),
    }
}

/// Renders descending powers, e.g. `q^3 - 2*q`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write_term(f, &c.abs(), k)?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, Serialize, Deserialize)]
struct PolynomialRepr {
    coeffs: Vec<String>,
}

impl From<Polynomial> for PolynomialRepr {
    fn from(p: Polynomial) -> Self {
        PolynomialRepr {
            coeffs: p.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<PolynomialRepr> for Polynomial {
    type Error = QpolyError;
    fn try_from(r: PolynomialRepr) -> Result<Self, QpolyError> {
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

/// An element of ℚ(q) in reduced form with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RationalFunctionRepr", into = "RationalFunctionRepr")]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    /// Builds `num / den` and reduces it to normal form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, QpolyError> {
        if den.is_zero() {
            return Err(QpolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            return Ok(RationalFunction { num, den });
        }
        let inv = lc.recip();
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Polynomial::one().into()
    }

    pub fn q() -> Self {
        Polynomial::q().into()
    }

    /// `q^k` as a rational function.
    pub fn q_pow(k: usize) -> Self {
        Polynomial::monomial(BigRational::one(), k).into()
    }

    pub fn from_rational(c: BigRational) -> Self {
        Polynomial::constant(c).into()
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, QpolyError> {
        if self.is_zero() {
            return Err(QpolyError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QpolyError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        // strip common powers of q from the denominator first
        let low = self.den.coeffs.iter().take_while(|c| c.is_zero()).count();
        let cancel = low.min(k);
        let den = if cancel == 0 {
            self.den.clone()
        } else {
            Polynomial::from_coeffs(self.den.coeffs[cancel..].to_vec())
        };
        RationalFunction {
            num: self.num.shift(k - cancel),
            den,
        }
    }

    /// Exact evaluation; a vanishing denominator is a pole.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational, QpolyError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(QpolyError::Pole { magnitude: 0.0 });
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> Result<f64, QpolyError> {
        self.eval_f64_with_tolerance(x, DEFAULT_POLE_TOLERANCE)
    }

    pub fn eval_f64_with_tolerance(&self, x: f64, tol: f64) -> Result<f64, QpolyError> {
        let d = self.den.eval_f64(x);
        if d.abs() <= tol {
            return Err(QpolyError::Pole { magnitude: d.abs() });
        }
        Ok(self.num.eval_f64(x) / d)
    }

    pub fn eval_at(&self, x: &Scalar) -> Result<Scalar, QpolyError> {
        match x {
            Scalar::Exact(r) => self.eval(r).map(Scalar::Exact),
            Scalar::Float(f) => self.eval_f64(*f).map(Scalar::Float),
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(num: Polynomial) -> Self {
        RationalFunction {
            num,
            den: Polynomial::one(),
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        combine(self, rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        combine(self, rhs, true)
    }
}

fn combine(a: &RationalFunction, b: &RationalFunction, subtract: bool) -> RationalFunction {
    let join = |x: &Polynomial, y: &Polynomial| if subtract { x - y } else { x + y };
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if subtract { -b } else { b.clone() };
    }
    if a.den == b.den {
        let num = join(&a.num, &b.num);
        if a.den.is_one() || num.is_zero() {
            return RationalFunction::new(num, a.den.clone()).expect("monic denominator");
        }
        let g = num.gcd(&a.den).expect("nonzero denominator");
        return RationalFunction {
            num: num.exact_div(&g),
            den: a.den.exact_div(&g),
        };
    }
    // both denominators monic, so every cofactor below stays monic
    let g = a.den.gcd(&b.den).expect("nonzero denominators");
    let a_co = a.den.exact_div(&g);
    let b_co = b.den.exact_div(&g);
    let t = join(&(&a.num * &b_co), &(&b.num * &a_co));
    if t.is_zero() {
        return RationalFunction::zero();
    }
    let g2 = t.gcd(&g).expect("nonzero");
    RationalFunction {
        num: t.exact_div(&g2),
        den: &a_co * &b.den.exact_div(&g2),
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let g1 = self.num.gcd(&rhs.den).expect("nonzero");
        let g2 = rhs.num.gcd(&self.den).expect("nonzero");
        RationalFunction {
            num: &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2),
            den: &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1),
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned_binops!(RationalFunction, Add::add, Sub::sub, Mul::mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

fn needs_parens(p: &Polynomial) -> bool {
    p.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) || self.den.leading().is_some_and(|c| !c.is_one()) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

#[derive(Clone, Serialize, Deserialize)]
struct RationalFunctionRepr {
    den: Polynomial,
    num: Polynomial,
}

impl From<RationalFunction> for RationalFunctionRepr {
    fn from(r: RationalFunction) -> Self {
        RationalFunctionRepr {
            num: r.num,
            den: r.den,
        }
    }
}

impl TryFrom<RationalFunctionRepr> for RationalFunction {
    type Error = QpolyError;
    fn try_from(r: RationalFunctionRepr) -> Result<Self, QpolyError> {
        RationalFunction::new(r.num, r.den)
    }
}

/// An evaluation point or value: exact rational or double.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(f) => *f,
        }
    }
}

/// `"3"` and `"-1/2"` parse exactly; anything with a decimal point or an
/// exponent parses as a double.
impl FromStr for Scalar {
    type Err = QpolyError;
    fn from_str(s: &str) -> Result<Self, QpolyError> {
        let t = s.trim();
        if t.contains(['.', 'e', 'E']) || t.eq_ignore_ascii_case("nan") || t.contains("inf") {
            return t
                .parse::<f64>()
                .ok()
                .filter(|f| f.is_finite())
                .map(Scalar::Float)
                .ok_or_else(|| QpolyError::MalformedNumber(s.to_string()));
        }
        parse_rational(t).map(Scalar::Exact)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{x:e}"),
        }
    }
}

fn chebyshev_table() -> &'static RwLock<Vec<Polynomial>> {
    static TABLE: OnceLock<RwLock<Vec<Polynomial>>> = OnceLock::new();
    // index k + 1 holds Δ_k
    TABLE.get_or_init(|| RwLock::new(vec![Polynomial::zero(), Polynomial::one()]))
}

/// Δ_k for k ≥ -1, from Δ_k = q·Δ_{k-1} − Δ_{k-2} with Δ_0 = 1, Δ_{-1} = 0.
///
/// Values are memoized in a process-wide table.
pub fn chebyshev(k: i64) -> Result<Polynomial, QpolyError> {
    if k < -1 {
        return Err(QpolyError::ChebyshevIndex(k));
    }
    let idx = (k + 1) as usize;
    {
        let table = chebyshev_table().read().expect("chebyshev cache poisoned");
        if let Some(p) = table.get(idx) {
            return Ok(p.clone());
        }
    }
    let mut table = chebyshev_table().write().expect("chebyshev cache poisoned");
    while table.len() <= idx {
        let len = table.len();
        let next = &table[len - 1].shift(1) - &table[len - 2];
        table.push(next);
    }
    Ok(table[idx].clone())
}

/// Δ_k / Δ_{k-1}, the per-arc factor of the diagonal entries, for k ≥ 1.
pub fn chebyshev_quotient(k: i64) -> Result<RationalFunction, QpolyError> {
    if k < 1 {
        return Err(QpolyError::ChebyshevIndex(k));
    }
    RationalFunction::new(chebyshev(k)?, chebyshev(k - 1)?)
}
