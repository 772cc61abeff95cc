//! Zonal and associated spherical elements: their expansions, invariance,
//! norms against the closed form, and mutual orthogonality.
//!
//! ```text
//! cargo run --example spherical_elements -- 3
//! ```

use qdisk::diskpoly::{assoc_spherical, spherical};
use qdisk::haar::{inner, norm_const, NormConstSpec};
use qdisk::uqaction::is_invariant;

fn main() -> qdisk::Result<()> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().expect("rank")).unwrap_or(3);
    println!("R_(1,1) in Z_{n}: {}", spherical(1, 1, n)?);

    for l in 0..=2 {
        for m in 0..=2 {
            let s = spherical(l, m, n)?;
            let norm = inner(&s, &s)?;
            let expected = norm_const(NormConstSpec::new(l, m, n as u32 - 2));
            println!(
                "(l,m) = ({l},{m}): {} terms, invariant {}, norm matches closed form {}",
                s.len(),
                is_invariant(&s, n - 1)?,
                norm == expected
            );
        }
    }
    println!("<R_(2,0), R_(1,1)> = {}", inner(&spherical(2, 0, n)?, &spherical(1, 1, n)?)?);

    if n >= 3 {
        let psi = assoc_spherical(2, 1, 1, 1, n)?;
        println!("associated element (2,1;1,1): {psi}");
        println!("invariant under U_q(gl({})): {}", n - 2, is_invariant(&psi, n - 2)?);
    }
    Ok(())
}
