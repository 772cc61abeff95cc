//! The tensor product `Z_3 ⊗ Z_2` hosting the two-variable algebras `X` and
//! `Y` of the addition formula, and the verifier that expands both sides of
//! the formula and compares them exactly.
//!
//! `X` is generated by `X_1 = z_2`, `X_2 = z_3`, their stars and `Q = Q_3` in
//! `Z_3`; `Y` by `Y_1 = z_1`, `Y_2 = z_2`, their stars and `D = Q_2` in `Z_2`.
//! Both realizations satisfy the defining relations of `X` and `Y` and map
//! their monomial bases injectively, so an identity that holds in
//! `Z_3 ⊗ Z_2` holds in `X ⊗ Y`.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::diskpoly::{disk_poly, DiskSpec, NcAlgebra};
use crate::error::{Error, Result};
use crate::haar::{norm_const, NormConstSpec};
use crate::qfield::QRat;
use crate::zalgebra::{cached_product, ExponentPair, ZElement};

/// A finite sum of `c · (x ⊗ y)` over basis monomials `x` of `Z_p` and `y`
/// of `Z_r`. Multiplication is componentwise: the two factors commute.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    left_rank: usize,
    right_rank: usize,
    terms: BTreeMap<(ExponentPair, ExponentPair), QRat>,
}

impl TensorElement {
    pub fn zero(left_rank: usize, right_rank: usize) -> Self {
        TensorElement { left_rank, right_rank, terms: BTreeMap::new() }
    }

    pub fn one(left_rank: usize, right_rank: usize) -> Self {
        Self::pure(&ZElement::one(left_rank), &ZElement::one(right_rank))
    }

    /// `x ⊗ y`.
    pub fn pure(x: &ZElement, y: &ZElement) -> Self {
        let mut t = Self::zero(x.rank(), y.rank());
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                t.add_term(mx.clone(), my.clone(), cx * cy);
            }
        }
        t
    }

    pub fn left_rank(&self) -> usize {
        self.left_rank
    }

    pub fn right_rank(&self) -> usize {
        self.right_rank
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

    pub fn terms(&self) -> impl Iterator<Item = (&(ExponentPair, ExponentPair), &QRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &ExponentPair, y: &ExponentPair) -> QRat {
        self.terms.get(&(x.clone(), y.clone())).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn add_term(&mut self, x: ExponentPair, y: ExponentPair, c: QRat) {
        if c.is_zero() {
            return;
        }
        let key = (x, y);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.left_rank != other.left_rank {
            return Err(Error::RankMismatch { left: self.left_rank, right: other.left_rank });
        }
        if self.right_rank != other.right_rank {
            return Err(Error::RankMismatch { left: self.right_rank, right: other.right_rank });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for ((x, y), c) in &other.terms {
            out.add_term(x.clone(), y.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&QRat::from(-1)))
    }

    /// `(x ⊗ y)(x' ⊗ y') = x x' ⊗ y y'`, extended bilinearly.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.left_rank, self.right_rank);
        for ((x1, y1), c1) in &self.terms {
            for ((x2, y2), c2) in &other.terms {
                let c12 = c1 * c2;
                let px = cached_product(x1, x2);
                let py = cached_product(y1, y2);
                for (mx, cx) in px.iter() {
                    let cxx = &c12 * cx;
                    for (my, cy) in py.iter() {
                        out.add_term(mx.clone(), my.clone(), &cxx * cy);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QRat) -> Self {
        let mut out = Self::zero(self.left_rank, self.right_rank);
        for ((x, y), v) in &self.terms {
            out.add_term(x.clone(), y.clone(), v * c);
        }
        out
    }

    /// Componentwise involution; coefficients are fixed.
    pub fn star(&self) -> Self {
        let flip = |m: &ExponentPair| ExponentPair { lambda: m.mu.clone(), mu: m.lambda.clone() };
        TensorElement {
            left_rank: self.left_rank,
            right_rank: self.right_rank,
            terms: self.terms.iter().map(|((x, y), c)| ((flip(x), flip(y)), c.clone())).collect(),
        }
    }

    /// Applies a linear map to the right tensor factor.
    pub fn map_right(&self, f: impl Fn(&ZElement) -> Result<ZElement>) -> Result<Self> {
        let mut out: Option<TensorElement> = None;
        for ((x, y), c) in &self.terms {
            let image = f(&ZElement::monomial(y.clone(), c.clone()))?;
            let piece = Self::pure(&ZElement::monomial(x.clone(), QRat::one()), &image);
            out = Some(match out {
                None => piece,
                Some(acc) => acc.try_add(&piece)?,
            });
        }
        Ok(out.unwrap_or_else(|| Self::zero(self.left_rank, self.right_rank)))
    }
}

impl NcAlgebra for TensorElement {
    fn unit_like(&self) -> Self {
        Self::one(self.left_rank, self.right_rank)
    }
    fn add(&self, other: &Self) -> Result<Self> {
        self.try_add(other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        self.try_sub(other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }
    fn scale(&self, c: &QRat) -> Self {
        TensorElement::scale(self, c)
    }
}

impl fmt::Display for TensorElement {
    /// `c*(x)⊗(y) + …`, leading left factor first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| b.0 .0.cmp_leading(&a.0 .0).then(b.0 .1.cmp_leading(&a.0 .1)));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|((x, y), c)| if c.is_one() { format!("({x})⊗({y})") } else { format!("{c}*({x})⊗({y})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The generators of `X ⊂ Z_3` and `Y ⊂ Z_2`.
#[derive(Clone, Debug)]
pub struct XYGenerators {
    pub x1: ZElement,
    pub x2: ZElement,
    pub x1s: ZElement,
    pub x2s: ZElement,
    pub q: ZElement,
    /// `Q' = Q - X_1 X_1^* - X_2 X_2^*`, which is `Q_1` in `Z_3`.
    pub q_prime: ZElement,
    pub y1: ZElement,
    pub y2: ZElement,
    pub y1s: ZElement,
    pub y2s: ZElement,
    pub d: ZElement,
}

impl XYGenerators {
    pub fn new() -> Self {
        let g = |r: Result<ZElement>| r.expect("indices within rank");
        let (x1, x2, x1s, x2s) = (g(ZElement::z(2, 3)), g(ZElement::z(3, 3)), g(ZElement::w(2, 3)), g(ZElement::w(3, 3)));
        let q = g(ZElement::q_element(3, 3));
        let q_prime = &(&q - &(&x1 * &x1s)) - &(&x2 * &x2s);
        XYGenerators {
            x1,
            x2,
            x1s,
            x2s,
            q,
            q_prime,
            y1: g(ZElement::z(1, 2)),
            y2: g(ZElement::z(2, 2)),
            y1s: g(ZElement::w(1, 2)),
            y2s: g(ZElement::w(2, 2)),
            d: g(ZElement::q_element(2, 2)),
        }
    }

    /// `x ⊗ 1`.
    pub fn left(&self, x: &ZElement) -> TensorElement {
        TensorElement::pure(x, &ZElement::one(2))
    }

    /// `1 ⊗ y`.
    pub fn right(&self, y: &ZElement) -> TensorElement {
        TensorElement::pure(&ZElement::one(3), y)
    }
}

impl Default for XYGenerators {
    fn default() -> Self {
        Self::new()
    }
}

/// Which form of the addition formula to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Arguments `-q X_1⊗Y_1^* + X_2⊗Y_2`, `-q X_1^*⊗Y_1 + X_2^*⊗Y_2^*`, `Q⊗D`.
    Final,
    /// Arguments `X_1⊗Y_1 + X_2⊗Y_2`, `q^2 X_1^*⊗Y_1^* + X_2^*⊗Y_2^*`, `Q⊗D`.
    Precursor,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Final => "final",
            Variant::Precursor => "precursor",
        })
    }
}

fn check_alpha(alpha: u32) -> Result<()> {
    if alpha == 0 {
        return Err(Error::InvalidParameter("the addition formula needs alpha >= 1".into()));
    }
    Ok(())
}

/// `c_{l,m;r,s}^{(α)} = (1-q^{2(α+r+s+1)})/(1-q^{2(α+1)})
/// · c_{l,m}^{(α)} / (c_{l-r,m-s}^{(α+r+s)} c_{r,s}^{(α-1)})`.
pub fn coupling_const(l: u32, m: u32, r: u32, s: u32, alpha: u32) -> Result<QRat> {
    check_alpha(alpha)?;
    if r > l || s > m {
        return Err(Error::InvalidParameter(format!("need r <= l and s <= m, got (l,m,r,s) = ({l},{m},{r},{s})")));
    }
    let a = alpha as i64;
    let ratio = QRat::one_minus_q_pow(2 * (a + (r + s) as i64 + 1)) / QRat::one_minus_q_pow(2 * (a + 1));
    let num = norm_const(NormConstSpec::new(l, m, alpha));
    let den = norm_const(NormConstSpec::new(l - r, m - s, alpha + r + s)) * norm_const(NormConstSpec::new(r, s, alpha - 1));
    Ok(ratio * num / den)
}

/// `R_{l,m}^{(α)}(A, B, Q⊗D; q^2)` with the arguments of `variant`.
pub fn addition_lhs(l: u32, m: u32, alpha: u32, variant: Variant) -> Result<TensorElement> {
    check_alpha(alpha)?;
    let g = XYGenerators::new();
    let t = TensorElement::pure;
    let mq = -QRat::q_pow(1);
    let (a, b) = match variant {
        Variant::Final => (
            t(&g.x1, &g.y1s).scale(&mq).try_add(&t(&g.x2, &g.y2))?,
            t(&g.x1s, &g.y1).scale(&mq).try_add(&t(&g.x2s, &g.y2s))?,
        ),
        Variant::Precursor => (
            t(&g.x1, &g.y1).try_add(&t(&g.x2, &g.y2))?,
            t(&g.x1s, &g.y1s).scale(&QRat::q_pow(2)).try_add(&t(&g.x2s, &g.y2s))?,
        ),
    };
    disk_poly(DiskSpec::new(l, m, alpha), &a, &b, &t(&g.q, &g.d))
}

/// `(-q)^k` for any integer `k`.
fn minus_q_pow(k: i64) -> QRat {
    let sign = if k.rem_euclid(2) == 0 { QRat::one() } else { QRat::from(-1) };
    sign * QRat::q_pow(k)
}

/// The `(r, s)` summand of the right-hand side, without its coupling constant.
pub fn addition_rhs_term(l: u32, m: u32, r: u32, s: u32, alpha: u32, variant: Variant) -> Result<TensorElement> {
    check_alpha(alpha)?;
    let g = XYGenerators::new();
    let outer = DiskSpec::new(l - r, m - s, alpha + r + s);
    let inner_c = &g.q - &(&g.x2 * &g.x2s);
    let left = disk_poly(outer, &g.x2, &g.x2s, &g.q)?.try_mul(&disk_poly(
        DiskSpec::new(r, s, alpha - 1),
        &g.x1,
        &g.x1s,
        &inner_c,
    )?)?;
    let radial = disk_poly(outer, &g.y2, &g.y2s, &g.d)?;
    let tail = match variant {
        Variant::Final => (&g.y1.pow(s) * &g.y1s.pow(r)).scale(&minus_q_pow(r as i64 - s as i64)),
        Variant::Precursor => &g.y1.pow(r) * &g.y1s.pow(s),
    };
    Ok(TensorElement::pure(&left, &radial.try_mul(&tail)?))
}

/// `Σ_{r<=l, s<=m} c_{l,m;r,s}^{(α)} · (r, s) summand`.
pub fn addition_rhs(l: u32, m: u32, alpha: u32, variant: Variant) -> Result<TensorElement> {
    let mut out = TensorElement::zero(3, 2);
    for r in 0..=l {
        for s in 0..=m {
            let term = addition_rhs_term(l, m, r, s, alpha, variant)?;
            out = out.try_add(&term.scale(&coupling_const(l, m, r, s, alpha)?))?;
        }
    }
    Ok(out)
}

/// One nonzero coefficient of `lhs - rhs`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ResidualTerm {
    pub left: ExponentPair,
    pub right: ExponentPair,
    pub coeff: QRat,
}

/// Outcome of [`verify_addition`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub l: u32,
    pub m: u32,
    pub alpha: u32,
    pub variant: Variant,
    pub pass: bool,
    pub residual_terms: Vec<ResidualTerm>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// Wall time; left out of JSON so the output is reproducible.
    #[serde(default, skip_serializing)]
    pub millis: u64,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} alpha={} l={} m={} {}: {} lhs terms, {} rhs terms, {} residual terms, {} ms",
            if self.pass { "PASS" } else { "FAIL" },
            self.alpha,
            self.l,
            self.m,
            self.variant,
            self.lhs_terms,
            self.rhs_terms,
            self.residual_terms.len(),
            self.millis
        )
    }
}

/// Expands both sides in `Z_3 ⊗ Z_2` and compares them exactly.
pub fn verify_addition(l: u32, m: u32, alpha: u32, variant: Variant) -> Result<Verdict> {
    let start = Instant::now();
    let lhs = addition_lhs(l, m, alpha, variant)?;
    let rhs = addition_rhs(l, m, alpha, variant)?;
    let diff = lhs.try_sub(&rhs)?;
    let residual_terms = diff
        .terms()
        .map(|((x, y), c)| ResidualTerm { left: x.clone(), right: y.clone(), coeff: c.clone() })
        .collect();
    Ok(Verdict {
        l,
        m,
        alpha,
        variant,
        pass: diff.is_zero(),
        residual_terms,
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        millis: start.elapsed().as_millis() as u64,
    })
}

/// The automorphism of `Y` sending `Y_1 ↦ -q Y_1^*`, `Y_1^* ↦ -q^{-1} Y_1`
/// and fixing `Y_2`, `Y_2^*`, applied to an element of `Z_2`.
pub fn sigma(y: &ZElement) -> Result<ZElement> {
    if y.rank() != 2 {
        return Err(Error::RankMismatch { left: 2, right: y.rank() });
    }
    let g = XYGenerators::new();
    let img1 = g.y1s.scale(&-QRat::q_pow(1));
    let img1s = g.y1.scale(&-QRat::q_pow(-1));
    let mut out = ZElement::zero(2);
    for (m, c) in y.terms() {
        // z_1^a z_2^b w_2^c w_1^d
        let word = [
            img1.pow(m.lambda[0]),
            g.y2.pow(m.lambda[1]),
            g.y2s.pow(m.mu[1]),
            img1s.pow(m.mu[0]),
        ];
        let image = word.iter().fold(ZElement::one(2), |acc, f| &acc * f);
        out = out.try_add(&image.scale(c))?;
    }
    Ok(out)
}
