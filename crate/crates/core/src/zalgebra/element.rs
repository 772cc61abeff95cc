//! Elements of `Z_n` as finite combinations of normal-form monomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::{monomial_product, ExponentPair};
use crate::error::{Error, Result};
use crate::qfield::QRat;

/// An element of `Z_n`: a map from basis monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZElement {
    rank: usize,
    terms: BTreeMap<ExponentPair, QRat>,
}

/// Result of [`ZElement::bidegree`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Bidegree {
    /// The zero element lies in every homogeneous component.
    Any,
    Homogeneous(u32, u32),
    Inhomogeneous,
}

type ProductCache = Mutex<HashMap<(ExponentPair, ExponentPair), Arc<Vec<(ExponentPair, QRat)>>>>;

const CACHE_LIMIT: usize = 1 << 18;

fn product_cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized normal-form product of two basis monomials.
pub(crate) fn cached_product(a: &ExponentPair, b: &ExponentPair) -> Arc<Vec<(ExponentPair, QRat)>> {
    let key = (a.clone(), b.clone());
    if let Some(hit) = product_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let value: Arc<Vec<_>> =
        Arc::new(monomial_product(a, b).into_iter().map(|(m, c)| (m, c.to_qrat())).collect());
    let mut cache = product_cache().lock().unwrap();
    if cache.len() >= CACHE_LIMIT {
        cache.clear();
    }
    cache.insert(key, value.clone());
    value
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, rank: n })
    } else {
        Ok(())
    }
}

impl ZElement {
    pub fn zero(n: usize) -> Self {
        ZElement { rank: n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, QRat::one())
    }

    pub fn scalar(n: usize, c: QRat) -> Self {
        Self::monomial(ExponentPair::unit(n), c)
    }

    /// `c * z^λ w^μ`.
    pub fn monomial(m: ExponentPair, c: QRat) -> Self {
        let mut e = Self::zero(m.rank());
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    /// Sums the given terms, dropping zero coefficients.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ExponentPair, QRat)>) -> Self {
        let mut e = Self::zero(n);
        for (m, c) in terms {
            assert_eq!(m.rank(), n, "monomial rank differs from element rank");
            e.add_term(m, c);
        }
        e
    }

    /// The generator `z_i` of `Z_n`.
    pub fn z(i: usize, n: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut m = ExponentPair::unit(n);
        m.lambda[i - 1] = 1;
        Ok(Self::monomial(m, QRat::one()))
    }

    /// The generator `w_i = z_i^*` of `Z_n`.
    pub fn w(i: usize, n: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut m = ExponentPair::unit(n);
        m.mu[i - 1] = 1;
        Ok(Self::monomial(m, QRat::one()))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentPair, &QRat)> {
        self.terms.iter()
    }

    /// Terms from the leading monomial downwards.
    pub fn sorted_terms(&self) -> Vec<(&ExponentPair, &QRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_leading(a.0));
        v
    }

    pub fn coeff(&self, m: &ExponentPair) -> QRat {
        self.terms.get(m).cloned().unwrap_or_else(QRat::zero)
    }

    /// The coefficient of the unit monomial.
    pub fn constant_term(&self) -> QRat {
        self.coeff(&ExponentPair::unit(self.rank))
    }

    pub fn add_term(&mut self, m: ExponentPair, c: QRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &QRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        ZElement { rank: self.rank, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    fn check_same_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Product in `Z_n`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let cab = ca * cb;
                for (m, c) in cached_product(ma, mb).iter() {
                    out.add_term(m.clone(), &cab * c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same rank");
        }
        acc
    }

    /// The involution `z_i ↔ w_i`, reversing products. The star of a normal
    /// monomial `z^λ w^μ` is the normal monomial `z^μ w^λ`.
    pub fn star(&self) -> Self {
        ZElement {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (ExponentPair { lambda: m.mu.clone(), mu: m.lambda.clone() }, c.clone()))
                .collect(),
        }
    }

    /// `Q_i = Σ_{k<=i} z_k w_k`.
    pub fn q_element(i: usize, n: usize) -> Result<Self> {
        check_index(i, n)?;
        Ok(Self::from_terms(
            n,
            (0..i).map(|k| {
                let mut m = ExponentPair::unit(n);
                m.lambda[k] = 1;
                m.mu[k] = 1;
                (m, QRat::one())
            }),
        ))
    }

    pub fn bidegree(&self) -> Bidegree {
        let mut degs = self.terms.keys().map(ExponentPair::degree);
        let Some(first) = degs.next() else {
            return Bidegree::Any;
        };
        if degs.all(|d| d == first) {
            Bidegree::Homogeneous(first.0, first.1)
        } else {
            Bidegree::Inhomogeneous
        }
    }

    /// Image under `z'_i ↦ z_i, w'_i ↦ w_i` in the larger algebra `Z_n`.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if self.rank >= n {
            return Err(Error::InvalidParameter(format!("cannot embed rank {} into rank {n}", self.rank)));
        }
        let pad = |v: &Vec<u32>| {
            let mut v = v.clone();
            v.resize(n, 0);
            v
        };
        Ok(ZElement {
            rank: n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (ExponentPair { lambda: pad(&m.lambda), mu: pad(&m.mu) }, c.clone()))
                .collect(),
        })
    }

    /// Image under the map killing `z_i, w_i` for `i <= n - s` and sending
    /// the remaining generators to `z'_{i-n+s}, w'_{i-n+s}` in `Z_s`.
    pub fn restrict(&self, s: usize) -> Result<Self> {
        let n = self.rank;
        if s >= n {
            return Err(Error::InvalidParameter(format!("cannot restrict rank {n} to rank {s}")));
        }
        let cut = n - s;
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let low_free = m.lambda[..cut].iter().chain(&m.mu[..cut]).all(|&e| e == 0);
            low_free.then(|| (ExponentPair::new(m.lambda[cut..].to_vec(), m.mu[cut..].to_vec()), c.clone()))
        });
        Ok(Self::from_terms(s, terms))
    }

    /// The character `z_i, w_i ↦ δ_{i,n}`.
    pub fn counit(&self) -> QRat {
        let n = self.rank;
        self.terms
            .iter()
            .filter(|(m, _)| m.lambda[..n - 1].iter().chain(&m.mu[..n - 1]).all(|&e| e == 0))
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&QRat) -> QRat) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl Add for &ZElement {
    type Output = ZElement;
    fn add(self, rhs: &ZElement) -> ZElement {
        self.try_add(rhs).expect("rank mismatch in addition")
    }
}

impl Add for ZElement {
    type Output = ZElement;
    fn add(self, rhs: ZElement) -> ZElement {
        &self + &rhs
    }
}

impl Sub for &ZElement {
    type Output = ZElement;
    fn sub(self, rhs: &ZElement) -> ZElement {
        self.try_sub(rhs).expect("rank mismatch in subtraction")
    }
}

impl Sub for ZElement {
    type Output = ZElement;
    fn sub(self, rhs: ZElement) -> ZElement {
        &self - &rhs
    }
}

impl Neg for &ZElement {
    type Output = ZElement;
    fn neg(self) -> ZElement {
        ZElement { rank: self.rank, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for ZElement {
    type Output = ZElement;
    fn neg(self) -> ZElement {
        -&self
    }
}

impl Mul for &ZElement {
    type Output = ZElement;
    fn mul(self, rhs: &ZElement) -> ZElement {
        self.try_mul(rhs).expect("rank mismatch in multiplication")
    }
}

impl Mul for ZElement {
    type Output = ZElement;
    fn mul(self, rhs: ZElement) -> ZElement {
        &self * &rhs
    }
}

impl fmt::Display for ZElement {
    /// Leading term first, e.g. `z[2]*w[2] + (1 - q^2)*z[1]*w[1]`. The output
    /// is accepted by the expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let unit = m.is_unit();
                if c.is_one() {
                    m.to_string()
                } else if (-c).is_one() {
                    if unit { "-1".to_string() } else { format!("-{m}") }
                } else if unit {
                    c.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambda: Vec<u32>,
    mu: Vec<u32>,
    coeff: QRat,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    rank: usize,
    terms: Vec<TermJson>,
}

impl Serialize for ZElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            rank: self.rank,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermJson { lambda: m.lambda.clone(), mu: m.mu.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        if raw.rank == 0 {
            return Err(serde::de::Error::custom("rank must be at least 1"));
        }
        let mut e = ZElement::zero(raw.rank);
        for t in raw.terms {
            if t.lambda.len() != raw.rank || t.mu.len() != raw.rank {
                return Err(serde::de::Error::custom("exponent vector length differs from rank"));
            }
            e.add_term(ExponentPair::new(t.lambda, t.mu), t.coeff);
        }
        Ok(e)
    }
}
