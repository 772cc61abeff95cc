//! Little q-Jacobi polynomials and Jackson q-integrals: coefficients,
//! orthogonality in the weighted Jackson integral, and the iterated integral
//! that represents the invariant functional.

use qdisk::qfield::QRat;
use qdisk::qfunc::{jackson_integral, little_q_jacobi, multi_jackson, MultiQPoly, UniPoly};

fn main() -> qdisk::Result<()> {
    let (alpha, beta) = (1i64, 2i64);
    let polys: Vec<UniPoly> = (0..=3).map(|m| little_q_jacobi(m, alpha, beta, 2)).collect::<qdisk::Result<_>>()?;
    for (m, p) in polys.iter().enumerate() {
        println!("P_{m}^({alpha},{beta})(x; q^2) = {p}");
    }

    // Weight x^α (q^2 x; q^2)_β in base q^2.
    let weight = &UniPoly::monomial(QRat::one(), alpha as usize) * &UniPoly::x_pochhammer(2, 2, beta as usize);
    for i in 0..polys.len() {
        let row: Vec<String> = (0..polys.len())
            .map(|j| {
                let v = jackson_integral(&(&(&polys[i] * &polys[j]) * &weight), 2);
                if v.is_zero() { "0".to_string() } else { "*".to_string() }
            })
            .collect();
        println!("Gram row {i}: {}", row.join(" "));
    }
    println!("norm of P_2: {}", jackson_integral(&(&(&polys[2] * &polys[2]) * &weight), 2));

    // Iterated integral over 0 <= Q_1 <= Q_2 <= 1 for n = 3.
    let phi = MultiQPoly::monomial(vec![1, 1], QRat::one());
    println!("iterated integral of Q_1 Q_2 for n = 3: {}", multi_jackson(&phi, 3)?);
    Ok(())
}
