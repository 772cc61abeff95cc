//! The algebra `Z_n` generated by `z_1, …, z_n, w_1, …, w_n` with
//!
//! ```text
//! z_i z_j = q z_j z_i            (i < j)
//! w_j w_i = q w_i w_j            (i < j)
//! w_i z_j = q z_j w_i            (i != j)
//! w_i z_i = z_i w_i + (1 - q^2) Σ_{k<i} z_k w_k
//! ```
//!
//! and the involution `z_i^* = w_i`. Elements are stored in the normal basis
//! `z_1^λ1 … z_n^λn w_n^μn … w_1^μ1`. Words are reduced by rewriting
//! ([`normal_order`]); products of stored elements use closed-form monomial
//! products that agree with the rewriting.

mod element;
mod monomial;
mod word;

pub(crate) use element::cached_product;
pub use element::{Bidegree, ZElement};
pub use monomial::ExponentPair;
pub use word::{normal_order, normal_order_with, Gen, GenKind, Strategy, Word};

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Dimension of the span of monomials with `|λ| = l`, `|μ| = m` in `Z_n`.
pub fn dim_z(l: u32, m: u32, n: usize) -> u128 {
    let n = n as u64;
    binomial(l as u64 + n - 1, n - 1) * binomial(m as u64 + n - 1, n - 1)
}

/// Dimension of the harmonic part `dim_z(l,m,n) - dim_z(l-1,m-1,n)`, in the
/// closed form `(l+m+n-1)(l+n-2)!(m+n-2)! / (l! m! (n-1)! (n-2)!)`.
pub fn dim_h(l: u32, m: u32, n: usize) -> u128 {
    assert!(n >= 2, "dim_h needs n >= 2");
    let (l, m, n) = (l as u64, m as u64, n as u64);
    (l + m + n - 1) as u128 * binomial(l + n - 2, l) * binomial(m + n - 2, m) / (n - 1) as u128
}

/// All exponent vectors of length `n` with entries summing to `total`.
pub fn compositions(total: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The monomial basis of the `(l, m)` component of `Z_n`.
pub fn basis(l: u32, m: u32, n: usize) -> Vec<ExponentPair> {
    let mus = compositions(m, n);
    compositions(l, n)
        .into_iter()
        .flat_map(|lam| mus.iter().map(move |mu| ExponentPair::new(lam.clone(), mu.clone())))
        .collect()
}
