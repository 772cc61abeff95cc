//! Words in the generators and their reduction to normal form by rewriting.

use std::collections::BTreeMap;
use std::fmt;

use super::monomial::{ExponentPair, Laurent};
use super::ZElement;
use crate::error::{Error, Result};

/// Which generator family a letter belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GenKind {
    Z,
    W,
}

/// One generator `z_i` or `w_i` with 1-based `index`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen {
    pub kind: GenKind,
    pub index: usize,
}

impl Gen {
    pub fn z(index: usize) -> Self {
        Gen { kind: GenKind::Z, index }
    }

    pub fn w(index: usize) -> Self {
        Gen { kind: GenKind::W, index }
    }

    /// `z_i ↔ w_i`.
    pub fn star(self) -> Self {
        match self.kind {
            GenKind::Z => Gen::w(self.index),
            GenKind::W => Gen::z(self.index),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.kind == GenKind::Z { 'z' } else { 'w' };
        write!(f, "{c}[{}]", self.index)
    }
}

/// A product of generators, read left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn new(gens: Vec<Gen>) -> Self {
        Word(gens)
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|g| g.index == 0 || g.index > n) {
            Some(g) => Err(Error::IndexOutOfRange { index: g.index, rank: n }),
            None => Ok(()),
        }
    }

    /// The word of a basis monomial: `z_1^λ1 … z_n^λn w_n^μn … w_1^μ1`.
    pub fn from_monomial(m: &ExponentPair) -> Self {
        let mut gens = Vec::new();
        for (i, &e) in m.lambda.iter().enumerate() {
            gens.extend(std::iter::repeat_n(Gen::z(i + 1), e as usize));
        }
        for (i, &e) in m.mu.iter().enumerate().rev() {
            gens.extend(std::iter::repeat_n(Gen::w(i + 1), e as usize));
        }
        Word(gens)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(Gen::to_string).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Order in which reducible adjacent pairs are rewritten.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Whether the adjacent pair `(a, b)` is out of normal order.
fn reducible(a: Gen, b: Gen) -> bool {
    use GenKind::*;
    match (a.kind, b.kind) {
        (Z, Z) => a.index > b.index,
        (W, W) => a.index < b.index,
        (W, Z) => true,
        (Z, W) => false,
    }
}

/// Rewrites the pair at `pos` and returns the resulting words with their
/// coefficients.
fn rewrite_at(word: &[Gen], pos: usize) -> Vec<(Vec<Gen>, Laurent)> {
    use GenKind::*;
    let (a, b) = (word[pos], word[pos + 1]);
    let splice = |mid: &[Gen]| {
        let mut v = Vec::with_capacity(word.len());
        v.extend_from_slice(&word[..pos]);
        v.extend_from_slice(mid);
        v.extend_from_slice(&word[pos + 2..]);
        v
    };
    match (a.kind, b.kind) {
        // z_i z_j = q^{-1} z_j z_i and w_i w_j = q^{-1} w_j w_i for the
        // out-of-order index pairs
        (Z, Z) | (W, W) => vec![(splice(&[b, a]), Laurent::q_pow(-1))],
        (W, Z) if a.index != b.index => vec![(splice(&[b, a]), Laurent::q_pow(1))],
        (W, Z) => {
            let i = a.index;
            let mut out = vec![(splice(&[b, a]), Laurent::one())];
            let corr = Laurent::from_terms(&[(1, 0), (-1, 2)]);
            for k in 1..i {
                out.push((splice(&[Gen::z(k), Gen::w(k)]), corr.clone()));
            }
            out
        }
        (Z, W) => unreachable!("(z, w) pairs are already ordered"),
    }
}

fn find_redex(word: &[Gen], strategy: Strategy) -> Option<usize> {
    let mut positions = 0..word.len().saturating_sub(1);
    match strategy {
        Strategy::Leftmost => positions.find(|&p| reducible(word[p], word[p + 1])),
        Strategy::Rightmost => positions.rfind(|&p| reducible(word[p], word[p + 1])),
    }
}

fn to_exponents(word: &[Gen], n: usize) -> ExponentPair {
    let mut m = ExponentPair::unit(n);
    for g in word {
        match g.kind {
            GenKind::Z => m.lambda[g.index - 1] += 1,
            GenKind::W => m.mu[g.index - 1] += 1,
        }
    }
    m
}

/// Normal form of a word in rank `n`, using leftmost-first rewriting.
pub fn normal_order(word: &Word, n: usize) -> Result<ZElement> {
    normal_order_with(word, n, Strategy::Leftmost)
}

/// Normal form of a word in rank `n` by repeated application of the
/// defining relations at the position chosen by `strategy`.
pub fn normal_order_with(word: &Word, n: usize, strategy: Strategy) -> Result<ZElement> {
    word.check_rank(n)?;
    let mut pending: BTreeMap<Vec<Gen>, Laurent> = BTreeMap::new();
    pending.insert(word.0.clone(), Laurent::one());
    let mut done: BTreeMap<ExponentPair, Laurent> = BTreeMap::new();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        match find_redex(&w, strategy) {
            None => {
                let key = to_exponents(&w, n);
                let sum = done.get(&key).map_or(c.clone(), |v| v.add(&c));
                done.insert(key, sum);
            }
            Some(pos) => {
                for (nw, nc) in rewrite_at(&w, pos) {
                    let nc = nc.mul(&c);
                    let sum = pending.get(&nw).map_or(nc.clone(), |v| v.add(&nc));
                    pending.insert(nw, sum);
                }
            }
        }
    }
    Ok(ZElement::from_terms(n, done.into_iter().map(|(k, v)| (k, v.to_qrat()))))
}
