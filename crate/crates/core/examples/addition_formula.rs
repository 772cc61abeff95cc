//! Verifies the addition formula for q-disk polynomials on a small grid,
//! for both the final and the precursor form.
//!
//! ```text
//! cargo run --release --example addition_formula -- 2 2 2
//! ```
//! Arguments: maximal alpha, l and m (defaults 2, 1, 1).

use qdisk::tensor::{verify_addition, Variant};

fn main() -> qdisk::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("nonnegative integer")).collect();
    let get = |i: usize, d: u32| args.get(i).copied().unwrap_or(d);
    let (max_alpha, max_l, max_m) = (get(0, 2), get(1, 1), get(2, 1));
    let mut failures = 0;
    for alpha in 1..=max_alpha {
        for l in 0..=max_l {
            for m in 0..=max_m {
                for variant in [Variant::Final, Variant::Precursor] {
                    let verdict = verify_addition(l, m, alpha, variant)?;
                    println!("{verdict}");
                    failures += usize::from(!verdict.pass);
                }
            }
        }
    }
    println!("{failures} failures");
    Ok(())
}
