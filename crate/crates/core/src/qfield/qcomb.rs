//! q-Pochhammer symbols and q-numbers with integer exponents.

use super::QRat;

/// `(q^a; q^step)_k = prod_{i<k} (1 - q^(a + i*step))`.
///
/// Exponents may be negative (the result is then a Laurent expression held
/// as a `QRat`); `step` may also be negative, e.g. `(q^-2; q^-2)_k`.
pub fn qpoch(a: i64, step: i64, k: usize) -> QRat {
    (0..k as i64).map(|i| QRat::one_minus_q_pow(a + i * step)).product()
}

/// `[m]_{q^base} = (1 - q^(m*base)) / (1 - q^base)`.
pub fn qnumber(m: u32, base: i64) -> QRat {
    assert!(base != 0, "q-number base exponent must be nonzero");
    // geometric sum, avoids a gcd
    (0..m as i64).map(|i| QRat::q_pow(i * base)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::IntPoly;

    fn poly(c: &[i64]) -> QRat {
        QRat::from_poly(IntPoly::from_i64s(c))
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(qpoch(1, 1, 2), poly(&[1, -1]) * poly(&[1, 0, -1]));
        assert_eq!(qpoch(2, 2, 0), QRat::one());
        assert_eq!(qpoch(-2, 2, 1), poly(&[-1, 0, 1]) / poly(&[0, 0, 1]));
    }

    #[test]
    fn qnumber_examples() {
        assert_eq!(qnumber(3, 1), poly(&[1, 1, 1]));
        assert_eq!(qnumber(0, -2), QRat::zero());
        assert_eq!(qnumber(2, -2), poly(&[1, 0, 1]) / poly(&[0, 0, 1]));
        // against the quotient form
        for m in 0..5u32 {
            for base in [-3i64, -1, 2] {
                let quot = QRat::one_minus_q_pow(m as i64 * base) / QRat::one_minus_q_pow(base);
                assert_eq!(qnumber(m, base), quot);
            }
        }
    }

    #[test]
    fn pochhammer_recurrence() {
        for a in -3..4 {
            for s in 1..4 {
                for k in 0..5usize {
                    let next = qpoch(a, s, k) * QRat::one_minus_q_pow(a + k as i64 * s);
                    assert_eq!(qpoch(a, s, k + 1), next);
                }
            }
        }
    }

    #[test]
    fn inverted_base_identity() {
        // (a^-1; q^-1)_m = (-1)^m a^-m q^(-m(m-1)/2) (a; q)_m with a = q^j
        for j in 1..=4i64 {
            for m in 0..=4i64 {
                let lhs = qpoch(-j, -1, m as usize);
                let sign = if m % 2 == 0 { QRat::one() } else { -QRat::one() };
                let rhs = sign * QRat::q_pow(-j * m - m * (m - 1) / 2) * qpoch(j, 1, m as usize);
                assert_eq!(lhs, rhs, "j={j} m={m}");
            }
        }
    }
}
