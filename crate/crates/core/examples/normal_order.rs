//! Reducing words in the generators of `Z_n` to the normal basis
//! `z^λ w^μ`, by rewriting and by the fast product, and printing the result.
//!
//! ```text
//! cargo run --example normal_order -- 3 "w[3]*z[3]*w[1]*z[2]"
//! ```

use qdisk::cli::parse_element;
use qdisk::zalgebra::{dim_h, dim_z, normal_order_with, Gen, Strategy, Word, ZElement};

fn main() -> qdisk::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map(|s| s.parse().expect("rank")).unwrap_or(2);
    let src = args.get(1).cloned().unwrap_or_else(|| "w[2]*z[2]".to_string());

    let element = parse_element(&src, n)?;
    println!("{src} = {element}");
    println!("star: {}", element.star());
    println!("bidegree: {:?}", element.bidegree());

    // The same reduction through two rewriting orders.
    let word = Word::new(vec![Gen::w(n), Gen::z(n), Gen::w(1), Gen::z(1)]);
    let left = normal_order_with(&word, n, Strategy::Leftmost)?;
    let right = normal_order_with(&word, n, Strategy::Rightmost)?;
    let fast = ZElement::w(n, n)? * ZElement::z(n, n)? * ZElement::w(1, n)? * ZElement::z(1, n)?;
    println!("{word} = {left}");
    println!("strategies agree: {}, product agrees: {}", left == right, left == fast);

    let q_n = ZElement::q_element(n, n)?;
    let z1 = ZElement::z(1, n)?;
    println!("Q_n central: {}", &q_n * &z1 == &z1 * &q_n);

    for (l, m) in [(1, 1), (2, 1), (2, 2)] {
        println!("dim Z({l},{m}) = {}, harmonic part {}", dim_z(l, m, n), dim_h(l, m, n.max(2)));
    }
    Ok(())
}
