//! Commutative q-special functions with integer parameters: little q-Jacobi
//! polynomials, Jackson q-integrals of polynomials, and the iterated Jackson
//! integral over `0 <= Q_1 <= … <= Q_{n-1} <= 1` in base `q^2`.
//!
//! Every base is passed explicitly as an exponent: `base = 2` means the
//! q-shifts are in `q^2`.

mod poly;

pub use poly::{MultiQPoly, UniPoly};

use crate::error::{Error, Result};
use crate::qfield::{qpoch, QRat};

/// `p_m(x; a, b; q')` with `q' = q^base`, `a = q'^a_exp`, `b = q'^b_exp`:
/// `Σ_k (q'^{-m};q')_k (ab q'^{m+1};q')_k / ((a q';q')_k (q';q')_k) (q' x)^k`.
pub fn little_q_jacobi(m: u32, a_exp: i64, b_exp: i64, base: i64) -> Result<UniPoly> {
    let m_i = m as i64;
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    for k in 0..=m as usize {
        let den = qpoch((a_exp + 1) * base, base, k) * qpoch(base, base, k);
        if den.is_zero() {
            return Err(Error::SingularParameters(format!(
                "vanishing denominator in p_{m}(x; q^{a_exp}, q^{b_exp}) at k = {k}"
            )));
        }
        let num = qpoch(-m_i * base, base, k) * qpoch((a_exp + b_exp + m_i + 1) * base, base, k);
        coeffs.push(num / den * QRat::q_pow(base * k as i64));
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// `P_m^{(α,β)}(x; q') = p_m(x; q'^α, q'^β; q')` with `q' = q^base`.
pub fn p_poly(m: u32, alpha: i64, beta: i64, base: i64) -> Result<UniPoly> {
    little_q_jacobi(m, alpha, beta, base)
}

/// `∫_0^1 x^k d_{q'} x = (1 - q') / (1 - q'^{k+1})`.
fn monomial_integral(k: usize, base: i64) -> QRat {
    QRat::one_minus_q_pow(base) / QRat::one_minus_q_pow(base * (k as i64 + 1))
}

/// `∫_0^1 p(x) d_{q'} x` with `q' = q^base`.
///
/// # Panics
/// If `base` is zero.
pub fn jackson_integral(p: &UniPoly, base: i64) -> QRat {
    assert!(base != 0, "Jackson integral needs a nonzero base exponent");
    p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| c * &monomial_integral(k, base)).sum()
}

/// `∫_0^c p(x) d_{q'} x` as a polynomial in the upper limit `c`.
pub fn jackson_antiderivative(p: &UniPoly, base: i64) -> UniPoly {
    assert!(base != 0, "Jackson integral needs a nonzero base exponent");
    let mut coeffs = vec![QRat::zero()];
    coeffs.extend(p.coeffs().iter().enumerate().map(|(k, c)| c * &monomial_integral(k, base)));
    UniPoly::from_coeffs(coeffs)
}

/// `∫_0^c p(x) d_{q'} x` for a concrete upper limit.
pub fn jackson_integral_to(p: &UniPoly, upper: &QRat, base: i64) -> QRat {
    jackson_antiderivative(p, base).eval(upper)
}

/// `∫_0^c p(x/c) d_{q'} x` as a polynomial in a symbolic `c`. The term
/// `a_k x^k` becomes `a_k c^{-k}` times `c^{k+1}/(…)`, so only the power
/// `c^1` survives.
pub fn jackson_scale(p: &UniPoly, base: i64) -> UniPoly {
    let mut out = UniPoly::zero();
    for (k, a) in p.coeffs().iter().enumerate() {
        // c^{-k} from the argument, c^{k+1} from the antiderivative
        let power = (k as i64 + 1) - k as i64;
        out = &out + &UniPoly::monomial(a * &monomial_integral(k, base), power as usize);
    }
    out
}

/// Checks `∫_0^1 f(q'^{-β}x) x^α (x;q'^{-1})_β d_{q'}x
/// = q'^{β(α+1)} ∫_0^1 f(x) x^α (q'x;q')_β d_{q'}x` exactly.
pub fn shift_identity_check(f: &UniPoly, alpha: u32, beta: u32, base: i64) -> bool {
    let (a, b) = (alpha as usize, beta as usize);
    let xa = UniPoly::monomial(QRat::one(), a);
    let lhs_integrand =
        &(&f.scale_arg(&QRat::q_pow(-(beta as i64) * base)) * &xa) * &UniPoly::x_pochhammer(0, -base, b);
    let rhs_integrand = &(f * &xa) * &UniPoly::x_pochhammer(base, base, b);
    let rhs = QRat::q_pow(base * beta as i64 * (alpha as i64 + 1)) * jackson_integral(&rhs_integrand, base);
    jackson_integral(&lhs_integrand, base) == rhs
}

fn check_vars(phi: &MultiQPoly, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("multiple Jackson integral needs n >= 2, got {n}")));
    }
    if phi.vars() > n - 1 {
        return Err(Error::IndexOutOfRange { index: phi.vars(), rank: n - 1 });
    }
    Ok(())
}

/// `∫_0^{Q_{n-1}} … ∫_0^{Q_2} φ d_{q^2}Q_1 … d_{q^2}Q_{n-2}` as a polynomial
/// in `Q_{n-1}`. Variables of `φ` beyond its own count are absent.
pub fn inner_jackson(phi: &MultiQPoly, n: usize) -> Result<UniPoly> {
    check_vars(phi, n)?;
    let mut out = UniPoly::zero();
    for (a, c) in phi.terms() {
        let exp = |i: usize| a.get(i).copied().unwrap_or(0);
        // running power of the current innermost variable
        let mut e = exp(0) as i64;
        let mut coef = c.clone();
        for j in 1..n - 1 {
            coef = coef * QRat::one_minus_q_pow(2) / QRat::one_minus_q_pow(2 * (e + 1));
            e += 1 + exp(j) as i64;
        }
        out = &out + &UniPoly::monomial(coef, e as usize);
    }
    Ok(out)
}

/// `(q^2;q^2)_{n-1} / (1-q^2)^{n-1} · ∫_0^1 ∫_0^{Q_{n-1}} … ∫_0^{Q_2} φ`,
/// all integrals in base `q^2`.
pub fn multi_jackson(phi: &MultiQPoly, n: usize) -> Result<QRat> {
    let inner = inner_jackson(phi, n)?;
    let pref = qpoch(2, 2, n - 1) / QRat::one_minus_q_pow(2).pow(n as i64 - 1)?;
    Ok(pref * jackson_integral(&inner, 2))
}
