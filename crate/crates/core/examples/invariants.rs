//! The `U_q(gl(n))` action on `Z_n` and its invariants: acting with the
//! Chevalley generators and computing invariant subspaces of `Z_n(l,m)`.

use qdisk::uqaction::{act_e, act_f, act_qh, invariant_subspace, is_invariant, Weight};
use qdisk::zalgebra::ZElement;

fn main() -> qdisk::Result<()> {
    let n = 3;
    let z3w2 = ZElement::z(3, n)? * ZElement::w(2, n)?;
    println!("x = {z3w2}");
    println!("f_2 x = {}", act_f(2, &z3w2)?);
    println!("e_2 x = {}", act_e(2, &z3w2)?);
    println!("q^h x with h = (1,0,2): {}", act_qh(&Weight::new(vec![1, 0, 2]), &z3w2)?);

    let q3 = ZElement::q_element(n, n)?;
    println!("Q_3 invariant under U_q(gl(3)): {}", is_invariant(&q3, 3)?);

    for (l, m) in [(1, 0), (1, 1), (2, 1), (2, 2)] {
        let inv = invariant_subspace(l, m, n, n - 1)?;
        println!("U_q(gl(2))-invariants in Z_3({l},{m}): dimension {}", inv.len());
        for v in &inv {
            println!("    {v}");
        }
    }
    Ok(())
}
