//! q-disk polynomials `R_{l,m}^{(α)}(A, B, C; q^2)` evaluated on elements of a
//! noncommutative algebra, and the zonal and associated spherical elements of
//! `Z_n` built from them.
//!
//! With `x = (C - AB)/C` and `P_m = P_m^{(α,|l-m|)}(x; q^2)`, the homogeneous
//! form is `C^m A^{l-m} P_m(x)` for `l >= m` and `C^l P_l(x) B^{m-l}` for
//! `l <= m`. It is expanded without division as
//! `Σ_k p_k C^{m-k} A^{l-m} (C - AB)^k` (resp. `Σ_k p_k C^{l-k} (C - AB)^k B^{m-l}`),
//! which requires `C` to commute with `A` and `B`.

use crate::error::{Error, Result};
use crate::qfield::QRat;
use crate::qfunc::little_q_jacobi;
use crate::zalgebra::ZElement;

/// The ring operations `disk_poly` needs from its ambient algebra.
pub trait NcAlgebra: Clone + PartialEq + std::fmt::Debug {
    /// The unit of the algebra containing `self`.
    fn unit_like(&self) -> Self;
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn scale(&self, c: &QRat) -> Self;

    fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = self.unit_like();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl NcAlgebra for ZElement {
    fn unit_like(&self) -> Self {
        ZElement::one(self.rank())
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
        ZElement::scale(self, c)
    }
}

/// Degrees and parameter of `R_{l,m}^{(α)}`; the base is always `q^2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiskSpec {
    pub l: u32,
    pub m: u32,
    pub alpha: u32,
}

impl DiskSpec {
    pub fn new(l: u32, m: u32, alpha: u32) -> Self {
        DiskSpec { l, m, alpha }
    }
}

fn check_commutes<T: NcAlgebra>(c: &T, x: &T, name: &str) -> Result<()> {
    if c.mul(x)? != x.mul(c)? {
        return Err(Error::CommutationViolated(format!("C does not commute with {name}")));
    }
    Ok(())
}

/// `R_{l,m}^{(α)}(A, B, C; q^2)` in the algebra of `a`, `b`, `c`.
pub fn disk_poly<T: NcAlgebra>(spec: DiskSpec, a: &T, b: &T, c: &T) -> Result<T> {
    check_commutes(c, a, "A")?;
    check_commutes(c, b, "B")?;
    let DiskSpec { l, m, alpha } = spec;
    let low = l.min(m);
    let jacobi = little_q_jacobi(low, alpha as i64, (l as i64 - m as i64).abs(), 2)?;
    let radial = c.sub(&a.mul(b)?)?;
    let outer = if l >= m { a.pow(l - m)? } else { b.pow(m - l)? };

    let c_pows: Vec<T> = std::iter::successors(Some(c.unit_like()), |p| p.mul(c).ok()).take(low as usize + 1).collect();
    let mut out = c.unit_like().scale(&QRat::zero());
    let mut radial_pow = c.unit_like();
    for k in 0..=low as usize {
        let coef = jacobi.coeff(k);
        if !coef.is_zero() {
            let c_part = &c_pows[low as usize - k];
            let term = if l >= m {
                c_part.mul(&outer)?.mul(&radial_pow)?
            } else {
                c_part.mul(&radial_pow)?.mul(&outer)?
            };
            out = out.add(&term.scale(&coef))?;
        }
        if k < low as usize {
            radial_pow = radial_pow.mul(&radial)?;
        }
    }
    Ok(out)
}

fn zq(i: usize, n: usize) -> Result<(ZElement, ZElement, ZElement)> {
    Ok((ZElement::z(i, n)?, ZElement::w(i, n)?, ZElement::q_element(i, n)?))
}

/// The zonal spherical element `R_{l,m}^{(n-2)}(z_n, w_n, Q_n; q^2)` of `Z_n`.
pub fn spherical(l: u32, m: u32, n: usize) -> Result<ZElement> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("spherical elements need n >= 2, got {n}")));
    }
    let (z, w, q) = zq(n, n)?;
    disk_poly(DiskSpec::new(l, m, n as u32 - 2), &z, &w, &q)
}

/// The associated spherical element
/// `R_{l-r,m-s}^{(n-2+r+s)}(z_n, w_n, Q_n) · R_{r,s}^{(n-3)}(z_{n-1}, w_{n-1}, Q_{n-1})`.
pub fn assoc_spherical(l: u32, m: u32, r: u32, s: u32, n: usize) -> Result<ZElement> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("associated spherical elements need n >= 3, got {n}")));
    }
    if r > l || s > m {
        return Err(Error::InvalidParameter(format!("need r <= l and s <= m, got (l,m,r,s) = ({l},{m},{r},{s})")));
    }
    let (zn, wn, qn) = zq(n, n)?;
    let (z1, w1, q1) = zq(n - 1, n)?;
    let a = n as u32 - 2;
    let first = disk_poly(DiskSpec::new(l - r, m - s, a + r + s), &zn, &wn, &qn)?;
    let second = disk_poly(DiskSpec::new(r, s, a - 1), &z1, &w1, &q1)?;
    first.try_mul(&second)
}
