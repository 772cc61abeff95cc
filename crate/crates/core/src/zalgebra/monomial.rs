//! Basis monomials `z^λ w^μ = z_1^λ1 … z_n^λn w_n^μn … w_1^μ1` and their
//! products.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::qfield::{IntPoly, QRat};

/// Exponent vectors `(λ, μ)` of a normal-form monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ExponentPair {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
}

impl ExponentPair {
    pub fn new(lambda: Vec<u32>, mu: Vec<u32>) -> Self {
        assert_eq!(lambda.len(), mu.len(), "exponent vectors of unequal length");
        ExponentPair { lambda, mu }
    }

    /// The unit monomial of rank `n`.
    pub fn unit(n: usize) -> Self {
        ExponentPair { lambda: vec![0; n], mu: vec![0; n] }
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    /// `(|λ|, |μ|)`.
    pub fn degree(&self) -> (u32, u32) {
        (self.lambda.iter().sum(), self.mu.iter().sum())
    }

    pub fn is_unit(&self) -> bool {
        self.lambda.iter().chain(&self.mu).all(|&e| e == 0)
    }

    /// The sequence `(|λ|+|μ|, λ_n, …, λ_1, μ_1, …, μ_n)` whose lexicographic
    /// order ranks monomials by leading term.
    pub fn order_key(&self) -> Vec<u32> {
        let (l, m) = self.degree();
        let mut key = Vec::with_capacity(2 * self.rank() + 1);
        key.push(l + m);
        key.extend(self.lambda.iter().rev());
        key.extend(self.mu.iter());
        key
    }

    /// Leading-term comparison (greater is "higher").
    pub fn cmp_leading(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for ExponentPair {
    /// `z[1]^2*z[3]*w[3]*w[1]`, or `1` for the unit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let pw = |g: char, i: usize, e: u32| if e == 1 { format!("{g}[{i}]") } else { format!("{g}[{i}]^{e}") };
        for (i, &e) in self.lambda.iter().enumerate() {
            if e > 0 {
                parts.push(pw('z', i + 1, e));
            }
        }
        for (i, &e) in self.mu.iter().enumerate().rev() {
            if e > 0 {
                parts.push(pw('w', i + 1, e));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A Laurent polynomial `q^low * poly` with integer coefficients; the
/// coefficient type of monomial products, where no division ever occurs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Laurent {
    low: i64,
    poly: IntPoly,
}

impl Laurent {
    pub(crate) fn q_pow(k: i64) -> Self {
        Laurent { low: k, poly: IntPoly::one() }
    }

    /// `q^k - q^j`-style binomials are built from these.
    pub(crate) fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut acc = Laurent::zero();
        for &(c, k) in terms {
            acc = acc.add(&Laurent { low: k, poly: IntPoly::constant(c) });
        }
        acc
    }

    pub(crate) fn zero() -> Self {
        Laurent { low: 0, poly: IntPoly::zero() }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn normalized(low: i64, poly: IntPoly) -> Self {
        if poly.is_zero() {
            return Laurent::zero();
        }
        let k = poly.low_order();
        Laurent { low: low + k as i64, poly: poly.shift_down(k) }
    }

    pub(crate) fn add(&self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let a = self.poly.shift_up((self.low - low) as usize);
        let b = o.poly.shift_up((o.low - low) as usize);
        Laurent::normalized(low, &a + &b)
    }

    pub(crate) fn mul(&self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        Laurent { low: self.low + o.low, poly: &self.poly * &o.poly }
    }

    pub(crate) fn mul_q_pow(&self, k: i64) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent { low: self.low + k, poly: self.poly.clone() }
    }

    pub(crate) fn to_qrat(&self) -> QRat {
        if self.poly.is_zero() {
            return QRat::zero();
        }
        if self.poly.is_one() {
            return QRat::q_pow(self.low);
        }
        QRat::from_laurent(self.low, self.poly.clone())
    }

    pub(crate) fn one() -> Self {
        Laurent { low: 0, poly: IntPoly::constant(BigInt::one()) }
    }

    #[allow(dead_code)]
    pub(crate) fn is_one(&self) -> bool {
        self.low == 0 && self.poly.is_one()
    }
}

pub(crate) type LaurentTerms = BTreeMap<ExponentPair, Laurent>;

fn accumulate(out: &mut LaurentTerms, key: ExponentPair, c: Laurent) {
    if c.is_zero() {
        return;
    }
    match out.get_mut(&key) {
        Some(v) => {
            *v = v.add(&c);
            if v.is_zero() {
                out.remove(&key);
            }
        }
        None => {
            out.insert(key, c);
        }
    }
}

/// `z^λ w^μ · z_j` in closed form (`j` is 0-based).
///
/// `z_j` travels left through the `w` block. Crossing `w_i`, `i != j`, costs a
/// factor `q`; crossing the whole `w_j^m` block uses
/// `w_j^m z_j = q^{2m} z_j w_j^m + (1 - q^{2m}) w_j^{m-1} Q_j`, after which
/// `Q_j = Σ_{k<=j} z_k w_k` is moved into place using
/// `w_k Q_j = q^2 Q_j w_k` (k > j) and `Q_j w_k = w_k Q_j` (k <= j).
fn right_mul_z(m: &ExponentPair, j: usize, coeff: &Laurent, out: &mut LaurentTerms) {
    let n = m.rank();
    let (lam, mu) = (&m.lambda, &m.mu);
    let s_lt: i64 = mu[..j].iter().map(|&e| e as i64).sum();
    let s_gt: i64 = mu[j + 1..].iter().map(|&e| e as i64).sum();
    let l_gt = |k: usize| -> i64 { lam[k + 1..].iter().map(|&e| e as i64).sum() };
    let mj = mu[j] as i64;

    let mut lam1 = lam.clone();
    lam1[j] += 1;
    accumulate(
        out,
        ExponentPair { lambda: lam1, mu: mu.clone() },
        coeff.mul_q_pow(s_lt + 2 * mj + s_gt - l_gt(j)),
    );

    if mj > 0 {
        // (1 - q^{2m}) q^{S_< + 2 S_>} z^λ Q_j w^{μ - ε_j}
        let pref = coeff.mul(&Laurent::from_terms(&[(1, 0), (-1, 2 * mj)])).mul_q_pow(s_lt + 2 * s_gt);
        let mut nu = mu.clone();
        nu[j] -= 1;
        for k in 0..=j {
            let n_gt: i64 = nu[k + 1..n].iter().map(|&e| e as i64).sum();
            let mut lam2 = lam.clone();
            lam2[k] += 1;
            let mut mu2 = nu.clone();
            mu2[k] += 1;
            accumulate(out, ExponentPair { lambda: lam2, mu: mu2 }, pref.mul_q_pow(-l_gt(k) - n_gt));
        }
    }
}

/// `z^λ w^μ · w_j`: `w_j` passes `w_1 … w_{j-1}` blocks at `q^{-1}` each.
fn right_mul_w(m: &ExponentPair, j: usize, coeff: &Laurent, out: &mut LaurentTerms) {
    let s_lt: i64 = m.mu[..j].iter().map(|&e| e as i64).sum();
    let mut mu = m.mu.clone();
    mu[j] += 1;
    accumulate(out, ExponentPair { lambda: m.lambda.clone(), mu }, coeff.mul_q_pow(-s_lt));
}

/// Right-multiplies a combination of monomials by one generator.
pub(crate) fn right_mul_gen(terms: &LaurentTerms, is_z: bool, j: usize) -> LaurentTerms {
    let mut out = LaurentTerms::new();
    for (m, c) in terms {
        if is_z {
            right_mul_z(m, j, c, &mut out);
        } else {
            right_mul_w(m, j, c, &mut out);
        }
    }
    out
}

/// Normal-form expansion of the product of two basis monomials.
pub(crate) fn monomial_product(a: &ExponentPair, b: &ExponentPair) -> LaurentTerms {
    let n = a.rank();
    let mut cur = LaurentTerms::new();
    // z^λ · z^λ' only needs reordering: each z_k of the right factor passes
    // the z_i (i > k) of the left factor at q^{-1}.
    let mut lam = a.lambda.clone();
    let mut shift = 0i64;
    for k in 0..n {
        if b.lambda[k] > 0 {
            let gt: i64 = lam[k + 1..].iter().map(|&e| e as i64).sum();
            shift -= gt * b.lambda[k] as i64;
            lam[k] += b.lambda[k];
        }
    }
    if a.mu.iter().all(|&e| e == 0) {
        // a = z^λ: product is z^{λ+λ'} w^{μ'} up to the reordering power
        cur.insert(ExponentPair { lambda: lam, mu: b.mu.clone() }, Laurent::q_pow(shift));
        return cur;
    }
    cur.insert(a.clone(), Laurent::one());
    for k in 0..n {
        for _ in 0..b.lambda[k] {
            cur = right_mul_gen(&cur, true, k);
        }
    }
    for k in (0..n).rev() {
        for _ in 0..b.mu[k] {
            cur = right_mul_gen(&cur, false, k);
        }
    }
    cur
}
