//! Exact arithmetic in `Q(q)`: canonical forms, q-Pochhammer symbols,
//! q-numbers and evaluation at rational points.

use num_rational::BigRational;
use qdisk::qfield::{qnumber, qpoch, IntPoly, QRat};

fn main() -> qdisk::Result<()> {
    let a = QRat::one_minus_q_pow(4);
    let b = QRat::one_minus_q_pow(2);
    println!("(1 - q^4)/(1 - q^2) = {}", a.checked_div(&b)?);

    let x = QRat::from_poly(IntPoly::from_i64s(&[1, 1])).inv()?;
    let y = QRat::q_pow(-1) + QRat::from(3);
    println!("x = {x}, y = {y}");
    println!("x*y - y*x = {}", &x * &y - &y * &x);
    println!("x + y = {}", &x + &y);

    println!("(q^2; q^2)_3 = {}", qpoch(2, 2, 3));
    println!("(q^-4; q^2)_3 = {}", qpoch(-4, 2, 3));
    println!("[3] in base q^-2 = {}", qnumber(3, -2));

    let half = BigRational::new(1.into(), 2.into());
    println!("x + y at q = 1/2: {}", (&x + &y).eval_at(&half)?);
    println!("as JSON: {}", serde_json::to_string(&(&x + &y)).expect("serializable"));

    match QRat::zero().inv() {
        Err(e) => println!("1/0: {e}"),
        Ok(v) => println!("1/0 unexpectedly gave {v}"),
    }
    Ok(())
}
