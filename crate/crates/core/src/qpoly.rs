//! Homogeneous polynomials in 4 variables over the rationals.
//!
//! The term order is graded-lex on exponent quadruples, so the 35 monomials
//! of degree 4 enumerate in a fixed order and every matrix built from them is
//! byte-stable across runs. Coefficients are reduced on every operation and
//! zero coefficients are never stored; the zero polynomial is the empty term
//! map (it still carries a degree, so that arithmetic stays degree-checked).

use crate::linalg::QMat;
use crate::rat::{rat, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

pub const NVARS: usize = 4;
const VAR_NAMES: [&str; NVARS] = ["x", "y", "z", "w"];

/// A power product `x^e0 y^e1 z^e2 w^e3`.
///
/// Ordered graded-lexicographically: first by total degree, then
/// lexicographically on the exponent quadruple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: [u32; NVARS],
}

impl Monomial {
    pub fn new(exps: [u32; NVARS]) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> [u32; NVARS] {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Value at a point, as an exact rational.
    pub fn evaluate(&self, p: &[Rat; NVARS]) -> Rat {
        let mut acc = rat(1);
        for (x, &e) in p.iter().zip(self.exps.iter()) {
            for _ in 0..e {
                acc *= x;
            }
        }
        acc
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += o;
        }
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, &e) in VAR_NAMES.iter().zip(self.exps.iter()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d`, in increasing graded-lex order.
///
/// The list has exactly C(d+3, 3) entries; for d = 4 that is the 35 monomials
/// spanning the space of quartic surfaces.
pub fn monomial_basis(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(binomial(d as usize + 3, 3));
    for e0 in 0..=d {
        for e1 in 0..=d - e0 {
            for e2 in 0..=d - e0 - e1 {
                out.push(Monomial::new([e0, e1, e2, d - e0 - e1 - e2]));
            }
        }
    }
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QpolyError {
    /// A term's exponents do not sum to the declared degree.
    DegreeMismatch { expected: u32, monomial: Monomial },
    /// The same monomial appears twice in an input term list.
    DuplicateTerm(Monomial),
}

impl fmt::Display for QpolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QpolyError::DegreeMismatch { expected, monomial } => write!(
                f,
                "monomial {monomial} has degree {}, expected {expected}",
                monomial.degree()
            ),
            QpolyError::DuplicateTerm(m) => write!(f, "duplicate monomial {m}"),
        }
    }
}

impl std::error::Error for QpolyError {}

/// A homogeneous polynomial of fixed degree in x, y, z, w over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPoly {
    degree: u32,
    terms: BTreeMap<Monomial, Rat>,
}

impl HomogPoly {
    pub fn zero(degree: u32) -> Self {
        HomogPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Build from (monomial, coefficient) pairs, all of total degree `degree`.
    /// Zero coefficients are dropped; duplicate monomials are rejected.
    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, Rat)>,
    ) -> Result<Self, QpolyError> {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(QpolyError::DegreeMismatch {
                    expected: degree,
                    monomial: m,
                });
            }
            if c.is_zero() {
                continue;
            }
            if map.insert(m, c).is_some() {
                return Err(QpolyError::DuplicateTerm(m));
            }
        }
        Ok(HomogPoly { degree, terms: map })
    }

    /// Convenience constructor with integer coefficients, used all over the
    /// test corpus: `from_int_terms(4, &[(1, [4,0,0,0]), (-1, [0,0,2,2])])`.
    pub fn from_int_terms(degree: u32, terms: &[(i64, [u32; NVARS])]) -> Self {
        let iter = terms.iter().map(|&(c, e)| (Monomial::new(e), rat(c)));
        Self::from_terms(degree, iter).expect("integer term list must be well-formed")
    }

    /// The i-th variable as a degree-1 polynomial.
    pub fn variable(i: usize) -> Self {
        let mut exps = [0u32; NVARS];
        exps[i] = 1;
        HomogPoly::from_int_terms(1, &[(1, exps)])
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(|| rat(0))
    }

    fn insert(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(|| rat(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &HomogPoly) -> HomogPoly {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HomogPoly) -> HomogPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HomogPoly {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, c: &Rat) -> HomogPoly {
        if c.is_zero() {
            return HomogPoly::zero(self.degree);
        }
        HomogPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &HomogPoly) -> HomogPoly {
        let mut out = HomogPoly::zero(self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> HomogPoly {
        let mut out = HomogPoly::from_int_terms(0, &[(1, [0; NVARS])]);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, p: &[Rat; NVARS]) -> Rat {
        let mut acc = rat(0);
        for (m, c) in &self.terms {
            acc += c * m.evaluate(p);
        }
        acc
    }

    /// Partial derivative with respect to the i-th variable, homogeneous of
    /// degree one less (the zero polynomial keeps degree 0 at the bottom).
    pub fn partial(&self, i: usize) -> HomogPoly {
        let mut out = HomogPoly::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps;
            exps[i] = e - 1;
            out.insert(Monomial::new(exps), c * rat(e as i64));
        }
        out
    }

    /// The four partial derivatives.
    pub fn gradient(&self) -> [HomogPoly; NVARS] {
        [self.partial(0), self.partial(1), self.partial(2), self.partial(3)]
    }

    /// The symmetric 4x4 matrix of second partials.
    pub fn hessian(&self) -> [[HomogPoly; NVARS]; NVARS] {
        let grad = self.gradient();
        std::array::from_fn(|i| std::array::from_fn(|j| grad[i].partial(j)))
    }

    /// Substitute variables by linear forms: the polynomial F(Mx) where M is
    /// a 4x4 matrix acting on column coordinates.
    pub fn compose_linear(&self, m: &QMat) -> HomogPoly {
        assert_eq!((m.rows(), m.cols()), (NVARS, NVARS));
        // rows of M give the linear form substituted for each variable
        let forms: Vec<HomogPoly> = (0..NVARS)
            .map(|i| {
                let mut f = HomogPoly::zero(1);
                for j in 0..NVARS {
                    let mut exps = [0u32; NVARS];
                    exps[j] = 1;
                    f.insert(Monomial::new(exps), m.at(i, j).clone());
                }
                f
            })
            .collect();
        let mut out = HomogPoly::zero(self.degree);
        for (mono, c) in &self.terms {
            let mut term = HomogPoly::from_int_terms(0, &[(1, [0; NVARS])]);
            for (i, &e) in mono.exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&forms[i].pow(e));
                }
            }
            out = out.add(&term.scale(c));
        }
        out
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else if *c == rat(1) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}
