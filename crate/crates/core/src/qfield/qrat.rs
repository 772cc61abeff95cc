//! Canonical rational functions in `q` with integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};

/// An element of `Q(q)`.
///
/// Always stored reduced: `gcd(num, den) = 1` in `Q[q]`, the combined
/// integer content of `num` and `den` is 1, and `den` has a positive leading
/// coefficient. Zero is `0/1`. Representation equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: IntPoly,
    den: IntPoly,
}

impl QRat {
    pub fn zero() -> Self {
        QRat { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        QRat { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        QRat { num: IntPoly::constant(c), den: IntPoly::one() }
    }

    /// `q^k` for any integer `k`; negative powers land in the denominator.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            QRat { num: IntPoly::monomial(1, k as usize), den: IntPoly::one() }
        } else {
            QRat { num: IntPoly::one(), den: IntPoly::monomial(1, (-k) as usize) }
        }
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::from_int(c) * Self::q_pow(k)
    }

    /// `1 - q^k`, the ubiquitous factor of q-Pochhammer symbols.
    pub fn one_minus_q_pow(k: i64) -> Self {
        Self::one() - Self::q_pow(k)
    }

    pub fn from_poly(p: IntPoly) -> Self {
        QRat { num: p, den: IntPoly::one() }.reduced()
    }

    /// A Laurent polynomial `q^shift * p`.
    pub fn from_laurent(shift: i64, p: IntPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        if shift >= 0 {
            QRat { num: p.shift_up(shift as usize), den: IntPoly::one() }.reduced()
        } else {
            let low = p.low_order();
            let down = low.min((-shift) as usize);
            let num = p.shift_down(down);
            let den = IntPoly::monomial(1, (-shift) as usize - down);
            QRat { num, den }.reduced()
        }
    }

    /// `num / den`, reduced. Fails when `den` is the zero polynomial.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QRat { num, den }.reduced())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a polynomial in `q` (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn reduced(self) -> Self {
        let QRat { mut num, mut den } = self;
        if num.is_zero() {
            return Self::zero();
        }
        if den.degree() != Some(0) {
            let g = num.gcd(&den);
            if g.degree() != Some(0) {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        QRat { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = QRat { num: self.den.clone(), den: self.num.clone() };
        if r.den.leading().unwrap().is_negative() {
            r.num = -&r.num;
            r.den = -&r.den;
        }
        Ok(r)
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QRat::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluates at a rational point. Fails when the denominator vanishes there.
    pub fn eval_at(&self, r: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(r) / d)
    }

    /// Substitutes `q -> q^k` for a nonzero integer `k`.
    pub fn subs_q_pow(&self, k: i64) -> Result<Self> {
        assert!(k != 0, "substitution q -> q^0 is not a field map");
        let sub = |p: &IntPoly| -> QRat {
            let mut acc = QRat::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc += &(QRat::from_int(c.clone()) * QRat::q_pow(k * i as i64));
                }
            }
            acc
        };
        sub(&self.num).checked_div(&sub(&self.den))
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        QRat::from_int(c)
    }
}

impl PartialOrd for QRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order, used only to make maps deterministic.
impl Ord for QRat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num.coeffs(), self.den.coeffs()).cmp(&(other.num.coeffs(), other.den.coeffs()))
    }
}

impl<'a> Add<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QRat { num: &self.num + &rhs.num, den: self.den.clone() }.reduced();
        }
        let g = self.den.gcd(&rhs.den);
        if g.degree() == Some(0) {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return QRat { num, den: &self.den * &rhs.den }.reduced();
        }
        // a/(g b') + c/(g d') = (a d' + c b') / (g b' d')
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        QRat { num, den: &(&b1 * &d1) * &g }.reduced()
    }
}

impl<'a> Sub<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cut = |p: &IntPoly, g: &IntPoly| {
            if g.degree() == Some(0) {
                p.clone()
            } else {
                p.div_exact(g).unwrap()
            }
        };
        let num = &cut(&self.num, &g1) * &cut(&rhs.num, &g2);
        let den = &cut(&self.den, &g2) * &cut(&rhs.den, &g1);
        // only integer content and sign remain to normalise
        let c = num.content().gcd(&den.content());
        let (mut num, mut den) = if c.is_one() { (num, den) } else { (num.div_scalar(&c), den.div_scalar(&c)) };
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        QRat { num, den }
    }
}

impl Div<&QRat> for &QRat {
    type Output = QRat;
    /// Panics on division by zero; see [`QRat::checked_div`].
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QRat> for QRat {
    fn sub_assign(&mut self, rhs: &QRat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&QRat> for QRat {
    fn mul_assign(&mut self, rhs: &QRat) {
        *self = &*self * rhs;
    }
}

impl Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |a, b| a + b)
    }
}

impl Product for QRat {
    fn product<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::one(), |a, b| a * b)
    }
}

impl fmt::Display for QRat {
    /// `num`, `(num)`, or `(num)/(den)`; parenthesised whenever the numerator
    /// has more than one term so the output re-parses as a coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
        let num = if single && !self.num.leading().is_some_and(|c| c.is_negative()) {
            self.num.to_string()
        } else {
            format!("({})", self.num)
        };
        if self.den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/({})", self.den)
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat[{self}]")
    }
}

/// Field operation selector for [`qrat_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic; only division by zero fails.
pub fn qrat_arith(a: &QRat, b: &QRat, op: FieldOp) -> Result<QRat> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}

// JSON form: {"num": ["1","0","-1"], "den": ["1"]}, ascending degree, integers
// as decimal strings.

#[derive(Serialize, Deserialize)]
struct QRatJson {
    num: Vec<JsonInt>,
    den: Vec<JsonInt>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Str(String),
    Num(i64),
}

impl JsonInt {
    fn to_big(&self) -> std::result::Result<BigInt, String> {
        match self {
            JsonInt::Str(s) => s.parse::<BigInt>().map_err(|e| format!("bad integer {s:?}: {e}")),
            JsonInt::Num(n) => Ok(BigInt::from(*n)),
        }
    }
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let conv = |p: &IntPoly| p.coeffs().iter().map(|c| JsonInt::Str(c.to_string())).collect();
        QRatJson { num: conv(&self.num), den: conv(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = QRatJson::deserialize(d)?;
        let conv = |v: &[JsonInt]| -> std::result::Result<IntPoly, String> {
            Ok(IntPoly::from_coeffs(v.iter().map(JsonInt::to_big).collect::<std::result::Result<_, _>>()?))
        };
        let num = conv(&raw.num).map_err(de::Error::custom)?;
        let den = conv(&raw.den).map_err(de::Error::custom)?;
        QRat::new(num, den).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QRat {
        QRat::from_poly(IntPoly::from_i64s(c))
    }

    #[test]
    fn arithmetic_examples() {
        let q = QRat::q_pow(1);
        assert_eq!(qrat_arith(&q, &QRat::one(), FieldOp::Add).unwrap(), poly(&[1, 1]));
        assert_eq!(poly(&[1, -1]) * poly(&[1, 1]), poly(&[1, 0, -1]));
        let r = qrat_arith(&QRat::one(), &poly(&[1, -1]), FieldOp::Div).unwrap();
        assert_eq!(r.num(), &IntPoly::from_i64s(&[-1]));
        assert_eq!(r.den(), &IntPoly::from_i64s(&[-1, 1]));
        assert!(matches!(qrat_arith(&q, &QRat::zero(), FieldOp::Div), Err(Error::DivisionByZero)));
    }

    #[test]
    fn canonical_form_is_unique() {
        // (2 - 2q^2) / (4 + 4q) = (1 - q)/2
        let a = QRat::new(IntPoly::from_i64s(&[2, 0, -2]), IntPoly::from_i64s(&[4, 4])).unwrap();
        assert_eq!(a.num(), &IntPoly::from_i64s(&[1, -1]));
        assert_eq!(a.den(), &IntPoly::from_i64s(&[2]));
        let z = QRat::new(IntPoly::zero(), IntPoly::from_i64s(&[0, 3])).unwrap();
        assert_eq!(z, QRat::zero());
        assert_eq!(z.den(), &IntPoly::one());
    }

    #[test]
    fn laurent_terms() {
        assert_eq!(QRat::q_pow(-2) * QRat::q_pow(2), QRat::one());
        assert_eq!(QRat::from_laurent(-2, IntPoly::from_i64s(&[0, 1, 1])).to_string(), "(1 + q)/(q)");
        assert_eq!(QRat::q_pow(-3).to_string(), "1/(q^3)");
    }

    #[test]
    fn json_round_trip() {
        let a = poly(&[1, 0, -1]) / poly(&[1, 0, 1]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"num":["1","0","-1"],"den":["1","0","1"]}"#);
        let b: QRat = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        let c: QRat = serde_json::from_str(r#"{"num":[2,0,-2],"den":[2]}"#).unwrap();
        assert_eq!(c, poly(&[1, 0, -1]));
    }

    #[test]
    fn substitution_of_q() {
        let a = poly(&[1, 1]) / poly(&[1, -1]);
        let b = a.subs_q_pow(-2).unwrap();
        assert_eq!(b, (QRat::one() + QRat::q_pow(-2)) / (QRat::one() - QRat::q_pow(-2)));
    }
}
