//! The left action of `U_q(gl(n))` on `Z_n` through its generators `q^h`,
//! `e_k`, `f_k`, evaluated on basis monomials by closed formulas, and the
//! invariant elements of a bidegree component.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::qfield::{qnumber, solve_linear, QRat, SolutionSpace};
use crate::zalgebra::{basis, ExponentPair, ZElement};

/// A weight `h = Σ h_i ε_i`, paired with exponent differences by
/// `⟨h, λ - μ⟩ = Σ h_i (λ_i - μ_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    pub h: Vec<i64>,
}

impl Weight {
    pub fn new(h: Vec<i64>) -> Self {
        Weight { h }
    }

    /// The basis weight `ε_i` (1-based) of rank `n`.
    pub fn unit(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let mut h = vec![0; n];
        h[i - 1] = 1;
        Ok(Weight { h })
    }

    pub fn rank(&self) -> usize {
        self.h.len()
    }

    fn pair(&self, m: &ExponentPair) -> i64 {
        self.h.iter().zip(m.lambda.iter().zip(&m.mu)).map(|(&h, (&l, &u))| h * (l as i64 - u as i64)).sum()
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight { h: self.h.iter().zip(&rhs.h).map(|(a, b)| a + b).collect() }
    }
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange { index: k, rank: n });
    }
    Ok(())
}

fn bracket(m: u32) -> QRat {
    qnumber(m, -2)
}

/// `q^h · a`: each monomial is scaled by `q^{⟨h, λ - μ⟩}`.
pub fn act_qh(h: &Weight, a: &ZElement) -> Result<ZElement> {
    if h.rank() != a.rank() {
        return Err(Error::RankMismatch { left: h.rank(), right: a.rank() });
    }
    Ok(ZElement::from_terms(a.rank(), a.terms().map(|(m, c)| (m.clone(), c * &QRat::q_pow(h.pair(m))))))
}

/// `f_k · a` for `1 <= k <= n - 1`.
pub fn act_f(k: usize, a: &ZElement) -> Result<ZElement> {
    let n = a.rank();
    check_k(k, n)?;
    let (i, j) = (k - 1, k);
    let mut out = ZElement::zero(n);
    for (m, c) in a.terms() {
        let (lam, mu) = (&m.lambda, &m.mu);
        if mu[j] > 0 {
            let mut t = m.clone();
            t.mu[j] -= 1;
            t.mu[i] += 1;
            let coef = -(QRat::q_pow(mu[i] as i64 + 1) * bracket(mu[j]));
            out.add_term(t, c * &coef);
        }
        if lam[i] > 0 {
            let mut t = m.clone();
            t.lambda[i] -= 1;
            t.lambda[j] += 1;
            let coef = QRat::q_pow(lam[j] as i64 + mu[i] as i64 - mu[j] as i64) * bracket(lam[i]);
            out.add_term(t, c * &coef);
        }
    }
    Ok(out)
}

/// `e_k · a` for `1 <= k <= n - 1`.
pub fn act_e(k: usize, a: &ZElement) -> Result<ZElement> {
    let n = a.rank();
    check_k(k, n)?;
    let (i, j) = (k - 1, k);
    let mut out = ZElement::zero(n);
    for (m, c) in a.terms() {
        let (lam, mu) = (&m.lambda, &m.mu);
        if mu[i] > 0 {
            let mut t = m.clone();
            t.mu[j] += 1;
            t.mu[i] -= 1;
            let coef = -(QRat::q_pow(mu[j] as i64 + lam[i] as i64 - lam[j] as i64 - 1) * bracket(mu[i]));
            out.add_term(t, c * &coef);
        }
        if lam[j] > 0 {
            let mut t = m.clone();
            t.lambda[i] += 1;
            t.lambda[j] -= 1;
            let coef = QRat::q_pow(lam[i] as i64) * bracket(lam[j]);
            out.add_term(t, c * &coef);
        }
    }
    Ok(out)
}

fn check_p(p: usize, n: usize) -> Result<()> {
    if p == 0 || p > n {
        return Err(Error::InvalidParameter(format!("subalgebra rank {p} outside 1..={n}")));
    }
    Ok(())
}

/// The operators whose common kernel is the `U_q(p)`-invariants: `q^{ε_i} - 1`
/// for `i <= p`, then `e_k` and `f_k` for `k <= p - 1`.
fn invariance_conditions(a: &ZElement, p: usize) -> Result<Vec<ZElement>> {
    let n = a.rank();
    check_p(p, n)?;
    let mut out = Vec::new();
    for i in 1..=p {
        out.push(&act_qh(&Weight::unit(i, n)?, a)? - a);
    }
    for k in 1..p {
        out.push(act_e(k, a)?);
        out.push(act_f(k, a)?);
    }
    Ok(out)
}

/// Whether `a` is fixed by `q^{ε_i}` (`i <= p`) and killed by `e_k`, `f_k`
/// (`k <= p - 1`).
pub fn is_invariant(a: &ZElement, p: usize) -> Result<bool> {
    Ok(invariance_conditions(a, p)?.iter().all(ZElement::is_zero))
}

/// Basis of the common kernel of linear maps applied to `span(basis)`.
/// `apply` returns the images of one element under every map, in a fixed
/// order.
pub(crate) fn common_kernel(
    n: usize,
    basis: &[ExponentPair],
    apply: impl Fn(&ZElement) -> Result<Vec<ZElement>>,
) -> Result<Vec<ZElement>> {
    let images: Vec<Vec<ZElement>> =
        basis.iter().map(|b| apply(&ZElement::monomial(b.clone(), QRat::one()))).collect::<Result<_>>()?;
    let maps = images.first().map_or(0, Vec::len);
    let mut rows = Vec::new();
    for t in 0..maps {
        let monos: BTreeSet<&ExponentPair> = images.iter().flat_map(|im| im[t].terms().map(|(m, _)| m)).collect();
        for mono in monos {
            rows.push(images.iter().map(|im| im[t].coeff(mono)).collect::<Vec<_>>());
        }
    }
    let nullspace = if rows.is_empty() {
        (0..basis.len())
            .map(|i| (0..basis.len()).map(|j| if i == j { QRat::one() } else { QRat::zero() }).collect())
            .collect()
    } else {
        let zeros = vec![QRat::zero(); rows.len()];
        match solve_linear(&rows, &zeros)? {
            SolutionSpace::Affine { nullspace, .. } => nullspace,
            SolutionSpace::Inconsistent => unreachable!("homogeneous systems are consistent"),
        }
    };
    Ok(nullspace
        .into_iter()
        .map(|v: Vec<QRat>| ZElement::from_terms(n, basis.iter().cloned().zip(v)))
        .collect())
}

/// A basis of the `U_q(p)`-invariant elements of bidegree `(l, m)` in `Z_n`.
pub fn invariant_subspace(l: u32, m: u32, n: usize, p: usize) -> Result<Vec<ZElement>> {
    check_p(p, n)?;
    common_kernel(n, &basis(l, m, n), |a| invariance_conditions(a, p))
}
