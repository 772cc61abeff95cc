//! The invariant functional on `Z_n`: values on monomials, inner products,
//! and positivity of a Gram matrix at sample values of `q`.

use num_rational::BigRational;
use qdisk::cli::parse_element;
use qdisk::haar::{gram_matrix, haar, haar_monomial, inner, positive_definite_at};
use qdisk::zalgebra::{basis, ZElement};

fn main() -> qdisk::Result<()> {
    let n = 3;
    println!("h(z_3 w_3) = {}", haar_monomial(&[0, 0, 1], &[0, 0, 1], n)?);
    println!("h(z_1^2 w_1^2) = {}", haar_monomial(&[2, 0, 0], &[2, 0, 0], n)?);
    println!("h(z_1 w_2) = {}", haar_monomial(&[1, 0, 0], &[0, 1, 0], n)?);

    let x = parse_element("Q[2]^2 - q*z[2]*w[1]", n)?;
    println!("h({x}) = {}", haar(&x));
    println!("h(Q_3 x) = h(x): {}", haar(&(&ZElement::q_element(n, n)? * &x)) == haar(&x));

    let a = parse_element("z[1] + z[3]", n)?;
    println!("<a, a> for a = {a}: {}", inner(&a, &a)?);

    let elements: Vec<ZElement> = basis(1, 1, 2).into_iter().map(|m| ZElement::monomial(m, 1.into())).collect();
    let gram = gram_matrix(&elements)?;
    for q in [(1, 2), (3, 4)] {
        let q = BigRational::new(q.0.into(), q.1.into());
        println!("Gram matrix of Z_2(1,1) positive definite at q = {q}: {}", positive_definite_at(&gram, &q)?);
    }
    Ok(())
}
