//! Commutative polynomials with `Q(q)` coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::qfield::QRat;

/// A univariate polynomial `Σ coeffs[i] x^i` over `Q(q)`; the last stored
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(from = "UniPolyJson", into = "UniPolyJson")]
pub struct UniPoly {
    coeffs: Vec<QRat>,
}

#[derive(Serialize, Deserialize)]
struct UniPolyJson {
    coeffs: Vec<QRat>,
}

impl From<UniPolyJson> for UniPoly {
    fn from(j: UniPolyJson) -> Self {
        UniPoly::from_coeffs(j.coeffs)
    }
}

impl From<UniPoly> for UniPolyJson {
    fn from(p: UniPoly) -> Self {
        UniPolyJson { coeffs: p.coeffs }
    }
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QRat::one())
    }

    pub fn constant(c: QRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(QRat::one(), 1)
    }

    /// `c x^k`.
    pub fn monomial(c: QRat, k: usize) -> Self {
        let mut coeffs = vec![QRat::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(QRat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// `Π_{i<k} (1 - q^{a + i*step} x)`.
    pub fn x_pochhammer(a: i64, step: i64, k: usize) -> Self {
        (0..k as i64).fold(Self::one(), |acc, i| {
            &acc * &Self::from_coeffs(vec![QRat::one(), -QRat::q_pow(a + i * step)])
        })
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QRat {
        self.coeffs.get(k).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &QRat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(c x)`.
    pub fn scale_arg(&self, c: &QRat) -> Self {
        let mut pw = QRat::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw = &pw * c;
        }
        Self::from_coeffs(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &QRat) -> QRat {
        self.coeffs.iter().rev().fold(QRat::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &-rhs
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![QRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl fmt::Display for UniPoly {
    /// Ascending powers, e.g. `1 + (q - 1)*x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match (k, c.is_one()) {
                (0, _) => c.to_string(),
                (1, true) => "x".to_string(),
                (_, true) => format!("x^{k}"),
                (1, false) => format!("{c}*x"),
                (_, false) => format!("{c}*x^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A polynomial in commuting variables `Q_1, …, Q_v` over `Q(q)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiQPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, QRat>,
}

impl MultiQPoly {
    pub fn zero(vars: usize) -> Self {
        MultiQPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], QRat::one())
    }

    /// `c Q^a`; the number of variables is `a.len()`.
    pub fn monomial(a: Vec<u32>, c: QRat) -> Self {
        let mut p = Self::zero(a.len());
        p.add_term(a, c);
        p
    }

    /// The variable `Q_i` (1-based) among `vars` variables.
    pub fn var(i: usize, vars: usize) -> Self {
        assert!(i >= 1 && i <= vars, "variable Q_{i} outside 1..={vars}");
        let mut a = vec![0; vars];
        a[i - 1] = 1;
        Self::monomial(a, QRat::one())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &QRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Vec<u32>, c: QRat) {
        assert_eq!(a.len(), self.vars, "exponent vector length differs from variable count");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(a).or_insert_with(QRat::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &QRat) -> Self {
        let mut out = Self::zero(self.vars);
        for (a, v) in &self.terms {
            out.add_term(a.clone(), v * c);
        }
        out
    }
}

impl Add for &MultiQPoly {
    type Output = MultiQPoly;
    fn add(self, rhs: &MultiQPoly) -> MultiQPoly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = self.clone();
        for (a, v) in &rhs.terms {
            out.add_term(a.clone(), v.clone());
        }
        out
    }
}

impl Mul for &MultiQPoly {
    type Output = MultiQPoly;
    fn mul(self, rhs: &MultiQPoly) -> MultiQPoly {
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let mut out = MultiQPoly::zero(self.vars);
        for (a, u) in &self.terms {
            for (b, v) in &rhs.terms {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), u * v);
            }
        }
        out
    }
}
