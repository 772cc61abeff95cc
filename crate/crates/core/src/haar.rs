//! The invariant functional `h_n` on `Z_n`, the inner product
//! `⟨a, b⟩ = h_n(b^* a)` and the squared norms `c_{l,m}^{(α)}` of q-disk
//! polynomials.
//!
//! `h_n` is defined on all of `Z_n` by its monomial formula; it factors
//! through the quotient `Q_n = 1`, so `h_n(Q_n a) = h_n(a)`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qfield::{determinant, qpoch, QRat};
use crate::qfunc::MultiQPoly;
use crate::zalgebra::ZElement;

fn check_lengths(lambda: &[u32], mu: &[u32], n: usize) -> Result<()> {
    if lambda.len() != n || mu.len() != n {
        return Err(Error::InvalidParameter(format!(
            "exponent vectors of lengths {} and {} in rank {n}",
            lambda.len(),
            mu.len()
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("rank must be at least 1".into()));
    }
    Ok(())
}

/// `h_n(z^λ w^μ) = δ_{λμ} q^{-2((n-1)λ_1 + … + λ_{n-1})}
/// Π_i (q^-2;q^-2)_{λ_i} (q^-2;q^-2)_{n-1} / (q^-2;q^-2)_{|λ|+n-1}`.
pub fn haar_monomial(lambda: &[u32], mu: &[u32], n: usize) -> Result<QRat> {
    check_lengths(lambda, mu, n)?;
    if lambda != mu {
        return Ok(QRat::zero());
    }
    let weight: i64 = lambda.iter().enumerate().map(|(i, &l)| (n - 1 - i) as i64 * l as i64).sum();
    let total: usize = lambda.iter().map(|&l| l as usize).sum();
    let mut num = qpoch(-2, -2, n - 1);
    for &l in lambda {
        num = num * qpoch(-2, -2, l as usize);
    }
    Ok(QRat::q_pow(-2 * weight) * num / qpoch(-2, -2, total + n - 1))
}

/// The same values in base `q^2`: `δ_{λμ} q^{|λ|^2 + Σ_i (2(i-1)λ_i - λ_i^2)}
/// Π_i (q^2;q^2)_{λ_i} (q^2;q^2)_{n-1} / (q^2;q^2)_{|λ|+n-1}`.
pub fn haar_monomial_alt(lambda: &[u32], mu: &[u32], n: usize) -> Result<QRat> {
    check_lengths(lambda, mu, n)?;
    if lambda != mu {
        return Ok(QRat::zero());
    }
    let total: i64 = lambda.iter().map(|&l| l as i64).sum();
    let exp = total * total
        + lambda.iter().enumerate().map(|(i, &l)| 2 * i as i64 * l as i64 - (l as i64) * (l as i64)).sum::<i64>();
    let mut num = qpoch(2, 2, n - 1);
    for &l in lambda {
        num = num * qpoch(2, 2, l as usize);
    }
    Ok(QRat::q_pow(exp) * num / qpoch(2, 2, total as usize + n - 1))
}

/// `h_n` extended linearly.
pub fn haar(a: &ZElement) -> QRat {
    a.terms()
        .filter(|(m, _)| m.lambda == m.mu)
        .map(|(m, c)| c * &haar_monomial(&m.lambda, &m.mu, a.rank()).expect("consistent lengths"))
        .sum()
}

/// `⟨a, b⟩ = h_n(b^* a)`.
pub fn inner(a: &ZElement, b: &ZElement) -> Result<QRat> {
    Ok(haar(&b.star().try_mul(a)?))
}

/// Indices of a squared norm `c_{l,m}^{(α)}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NormConstSpec {
    pub l: u32,
    pub m: u32,
    pub alpha: u32,
}

impl NormConstSpec {
    pub fn new(l: u32, m: u32, alpha: u32) -> Self {
        NormConstSpec { l, m, alpha }
    }
}

/// `c_{l,m}^{(α)} = (1-q^{2(α+1)}) q^{2m(α+1)} / (1-q^{2(α+l+m+1)})
/// · (q^2;q^2)_l (q^2;q^2)_m / ((q^{2(α+1)};q^2)_l (q^{2(α+1)};q^2)_m)`.
pub fn norm_const(spec: NormConstSpec) -> QRat {
    let NormConstSpec { l, m, alpha } = spec;
    let (a1, l, m) = (alpha as i64 + 1, l as usize, m as usize);
    QRat::one_minus_q_pow(2 * a1) * QRat::q_pow(2 * m as i64 * a1)
        / QRat::one_minus_q_pow(2 * (a1 + (l + m) as i64))
        * qpoch(2, 2, l)
        * qpoch(2, 2, m)
        / (qpoch(2 * a1, 2, l) * qpoch(2 * a1, 2, m))
}

/// `Q_1^{a_1} … Q_k^{a_k}` in `Z_n` (`k = a.len() <= n`).
pub fn radial_monomial(a: &[u32], n: usize) -> Result<ZElement> {
    let mut acc = ZElement::one(n);
    for (i, &e) in a.iter().enumerate() {
        acc = acc.try_mul(&ZElement::q_element(i + 1, n)?.pow(e))?;
    }
    Ok(acc)
}

/// `φ(Q_1, …, Q_k)` realized in `Z_n`.
pub fn radial_element(phi: &MultiQPoly, n: usize) -> Result<ZElement> {
    let mut out = ZElement::zero(n);
    for (a, c) in phi.terms() {
        out = out.try_add(&radial_monomial(a, n)?.scale(c))?;
    }
    Ok(out)
}

/// `[⟨b_i, b_j⟩]`.
pub fn gram_matrix(elements: &[ZElement]) -> Result<Vec<Vec<QRat>>> {
    elements.iter().map(|a| elements.iter().map(|b| inner(a, b)).collect()).collect()
}

/// Whether a Gram matrix is positive definite at the rational point `q`,
/// by exact leading principal minors.
pub fn positive_definite_at(gram: &[Vec<QRat>], q: &BigRational) -> Result<bool> {
    let at: Vec<Vec<BigRational>> =
        gram.iter().map(|row| row.iter().map(|c| c.eval_at(q)).collect::<Result<_>>()).collect::<Result<_>>()?;
    for k in 1..=at.len() {
        let minor: Vec<Vec<BigRational>> = at[..k].iter().map(|r| r[..k].to_vec()).collect();
        if determinant(&minor) <= BigRational::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
