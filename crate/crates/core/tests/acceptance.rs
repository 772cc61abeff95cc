//! Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact equality in `Q(q)`.

use std::collections::{BTreeMap, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qdisk::diskpoly::{assoc_spherical, disk_poly, spherical, DiskSpec, NcAlgebra};
use qdisk::haar::{
    gram_matrix, haar, haar_monomial, haar_monomial_alt, inner, norm_const, positive_definite_at, radial_monomial,
    NormConstSpec,
};
use qdisk::qfield::{qpoch, rank, QRat};
use qdisk::qfunc::{jackson_integral, little_q_jacobi, multi_jackson, shift_identity_check, MultiQPoly, UniPoly};
use qdisk::tensor::{addition_lhs, addition_rhs, coupling_const, verify_addition, TensorElement, Variant, XYGenerators};
use qdisk::uqaction::{act_e, act_f, act_qh, invariant_subspace, is_invariant, Weight};
use qdisk::zalgebra::{basis, compositions, normal_order_with, ExponentPair, Gen, GenKind, Strategy, Word, ZElement};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn lift<T>(r: qdisk::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn qp(k: i64) -> QRat {
    QRat::q_pow(k)
}

fn om(k: i64) -> QRat {
    QRat::one_minus_q_pow(k)
}

fn addition_grid() -> Vec<(u32, u32, u32)> {
    let mut cases = Vec::new();
    for alpha in 1..=4 {
        for l in 0..=2 {
            for m in 0..=2 {
                cases.push((alpha, l, m));
            }
        }
    }
    for alpha in 1..=2 {
        cases.push((alpha, 3, 1));
        cases.push((alpha, 2, 3));
    }
    cases
}

fn addition_formula(variant: Variant) -> Check {
    let mut slowest = 0;
    let cases = addition_grid();
    for &(alpha, l, m) in &cases {
        let v = lift(verify_addition(l, m, alpha, variant))?;
        ensure(v.pass, || format!("{v}"))?;
        slowest = slowest.max(v.millis);
    }
    Ok(format!("{} cases, zero residual, slowest {slowest} ms", cases.len()))
}

fn spherical_norms() -> Check {
    let mut count = 0;
    for n in 2..=4usize {
        for l in 0..=3 {
            for m in 0..=3 {
                let s = lift(spherical(l, m, n))?;
                let got = lift(inner(&s, &s))?;
                let want = norm_const(NormConstSpec::new(l, m, n as u32 - 2));
                ensure(got == want, || format!("n={n} l={l} m={m}: {got} != {want}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} norms match the closed form"))
}

fn spherical_orthogonality() -> Check {
    let mut count = 0;
    for n in 2..=3usize {
        let idx: Vec<(u32, u32)> = (0..=2).flat_map(|l| (0..=2).map(move |m| (l, m))).collect();
        let elems: Vec<ZElement> = idx.iter().map(|&(l, m)| lift(spherical(l, m, n))).collect::<Result<_, _>>()?;
        for i in 0..idx.len() {
            for j in 0..idx.len() {
                if i != j {
                    let v = lift(inner(&elems[i], &elems[j]))?;
                    ensure(v.is_zero(), || format!("n={n} {:?} vs {:?}: {v}", idx[i], idx[j]))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} distinct pairs orthogonal"))
}

fn assoc_tuples() -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for l in 0..=2 {
        for m in 0..=2 {
            for r in 0..=l {
                for s in 0..=m {
                    out.push((l, m, r, s));
                }
            }
        }
    }
    out
}

fn assoc_inner_products() -> Check {
    let mut norms = 0;
    let mut zeros = 0;
    for n in 3..=4usize {
        let alpha = n as u32 - 2;
        let tuples = assoc_tuples();
        let elems: Vec<ZElement> =
            tuples.iter().map(|&(l, m, r, s)| lift(assoc_spherical(l, m, r, s, n))).collect::<Result<_, _>>()?;
        for (i, &(l, m, r, s)) in tuples.iter().enumerate() {
            let got = lift(inner(&elems[i], &elems[i]))?;
            let a = alpha as i64;
            let want = om(2 * (a + 1)) / om(2 * (a + (r + s) as i64 + 1))
                * norm_const(NormConstSpec::new(l - r, m - s, alpha + r + s))
                * norm_const(NormConstSpec::new(r, s, alpha - 1));
            ensure(got == want, || format!("n={n} (l,m,r,s)=({l},{m},{r},{s}): {got} != {want}"))?;
            norms += 1;
            for j in 0..tuples.len() {
                if j != i {
                    let v = lift(inner(&elems[i], &elems[j]))?;
                    ensure(v.is_zero(), || format!("n={n} {:?} vs {:?}: {v}", tuples[i], tuples[j]))?;
                    zeros += 1;
                }
            }
        }
    }
    Ok(format!("{norms} norms exact, {zeros} cross terms vanish"))
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> ZElement {
    let terms = rng.gen_range(1..=4);
    ZElement::from_terms(
        n,
        (0..terms).map(|_| {
            let lam = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            let mu = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            let c = QRat::monomial(rng.gen_range(-3i64..=3), rng.gen_range(-2i64..=2)) + QRat::from(rng.gen_range(-2i64..=2));
            (ExponentPair::new(lam, mu), c)
        }),
    )
}

fn haar_consistency() -> Check {
    let mut monomials = 0;
    for n in 1..=4usize {
        let lams: Vec<Vec<u32>> = (0..=4).flat_map(|k| compositions(k, n)).collect();
        for lam in &lams {
            for mu in &lams {
                let a = lift(haar_monomial(lam, mu, n))?;
                let b = lift(haar_monomial_alt(lam, mu, n))?;
                ensure(a == b, || format!("n={n} λ={lam:?} μ={mu:?}: {a} != {b}"))?;
                monomials += 1;
            }
        }
    }
    let mut radial = 0;
    for n in 2..=4usize {
        for a in boxes(n - 1, 2) {
            let lhs = haar(&lift(radial_monomial(&a, n))?);
            let rhs = lift(multi_jackson(&MultiQPoly::monomial(a.clone(), QRat::one()), n))?;
            ensure(lhs == rhs, || format!("n={n} a={a:?}: {lhs} != {rhs}"))?;
            radial += 1;
        }
    }
    for n in 1..=4 {
        ensure(haar(&ZElement::one(n)).is_one(), || format!("h(1) != 1 for n={n}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let samples = 120;
    for _ in 0..samples {
        let n = rng.gen_range(2..=3);
        let x = random_element(&mut rng, n);
        let hx = haar(&x);
        let qn = lift(ZElement::q_element(n, n))?;
        ensure(haar(&(&qn * &x)) == hx, || format!("h(Q_n x) != h(x) for x = {x}"))?;
        for k in 1..n {
            ensure(haar(&lift(act_e(k, &x))?).is_zero(), || format!("h(e_{k} x) != 0 for x = {x}"))?;
            ensure(haar(&lift(act_f(k, &x))?).is_zero(), || format!("h(f_{k} x) != 0 for x = {x}"))?;
        }
        let w = Weight::new((0..n).map(|_| rng.gen_range(-3..=3)).collect());
        ensure(haar(&lift(act_qh(&w, &x))?) == hx, || format!("h(q^h x) != h(x) for x = {x}"))?;
    }
    Ok(format!("{monomials} monomial pairs, {radial} radial monomials, {samples} random invariance samples"))
}

fn boxes(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v| (0..=max).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out
}

fn invariance_suite() -> Check {
    let mut checked = 0;
    for n in 2..=4usize {
        for l in 0..=3 {
            for m in 0..=3 {
                let s = lift(spherical(l, m, n))?;
                ensure(lift(is_invariant(&s, n - 1))?, || format!("spherical n={n} l={l} m={m} not invariant"))?;
                checked += 1;
            }
        }
    }
    for n in 3..=4usize {
        for (l, m, r, s) in assoc_tuples() {
            let psi = lift(assoc_spherical(l, m, r, s, n))?;
            ensure(lift(is_invariant(&psi, n - 2))?, || format!("associated n={n} ({l},{m},{r},{s}) not invariant"))?;
            checked += 1;
        }
    }
    let mut dims = 0;
    for n in 2..=3usize {
        for l in 0..=2u32 {
            for m in 0..=2u32 {
                let full = lift(invariant_subspace(l, m, n, n))?.len();
                ensure(full == usize::from(l == m), || format!("full invariants n={n} ({l},{m}): {full}"))?;
                let sub = lift(invariant_subspace(l, m, n, n - 1))?.len();
                ensure(sub == l.min(m) as usize + 1, || format!("corank-1 invariants n={n} ({l},{m}): {sub}"))?;
                dims += 2;
                if n == 3 {
                    let want: u32 = (0..=l.min(m)).map(|j| (l - j + 1) * (m - j + 1)).sum();
                    let got = lift(invariant_subspace(l, m, 3, 1))?.len();
                    ensure(got == want as usize, || format!("U_q(gl(1)) invariants ({l},{m}): {got} != {want}"))?;
                    dims += 1;
                }
            }
        }
    }
    Ok(format!("{checked} elements invariant, {dims} subspace dimensions match"))
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> Word {
    let len = rng.gen_range(0..=8);
    Word::new(
        (0..len)
            .map(|_| {
                let i = rng.gen_range(1..=n);
                if rng.gen_bool(0.5) {
                    Gen::z(i)
                } else {
                    Gen::w(i)
                }
            })
            .collect(),
    )
}

fn gen_element(g: &Gen, n: usize) -> qdisk::Result<ZElement> {
    match g.kind {
        GenKind::Z => ZElement::z(g.index, n),
        GenKind::W => ZElement::w(g.index, n),
    }
}

fn identity_suite() -> Result<usize, String> {
    let mut count = 0;
    for n in 1..=4usize {
        let z = |i| lift(ZElement::z(i, n));
        let w = |i| lift(ZElement::w(i, n));
        let qe = |i| if i == 0 { Ok(ZElement::zero(n)) } else { lift(ZElement::q_element(i, n)) };
        for k in 1..=n {
            ensure(&z(k)? * &w(k)? == &qe(k)? - &qe(k - 1)?, || format!("z_k w_k split, k={k} n={n}"))?;
            ensure(&w(k)? * &z(k)? == &qe(k)? - &qe(k - 1)?.scale(&qp(2)), || format!("w_k z_k split, k={k} n={n}"))?;
            for i in 1..=n {
                let q_i = qe(i)?;
                let (zc, wc) = if k > i { (qp(-2), qp(2)) } else { (QRat::one(), QRat::one()) };
                ensure(&z(k)? * &q_i == (&q_i * &z(k)?).scale(&zc), || format!("z_{k} past Q_{i}, n={n}"))?;
                ensure(&w(k)? * &q_i == (&q_i * &w(k)?).scale(&wc), || format!("w_{k} past Q_{i}, n={n}"))?;
                ensure(&qe(k)? * &q_i == &q_i * &qe(k)?, || format!("Q_{k} Q_{i} commute, n={n}"))?;
                count += 3;
            }
            let (big, small) = (qe(k)?, qe(k - 1)?);
            for m in 0..=3u32 {
                let mut pz = ZElement::one(n);
                let mut pw = ZElement::one(n);
                for i in 0..m as i64 {
                    pz = &pz * &(&big - &small.scale(&qp(-2 * i)));
                    pw = &pw * &(&big - &small.scale(&qp(2 * i + 2)));
                }
                ensure(&z(k)?.pow(m) * &w(k)?.pow(m) == pz, || format!("z^m w^m product, k={k} m={m} n={n}"))?;
                ensure(&w(k)?.pow(m) * &z(k)?.pow(m) == pw, || format!("w^m z^m product, k={k} m={m} n={n}"))?;
                if m >= 1 {
                    let lhs = &w(k)?.pow(m) * &z(k)?;
                    let rhs = &(&z(k)? * &w(k)?.pow(m)).scale(&qp(2 * m as i64))
                        + &(&w(k)?.pow(m - 1) * &big).scale(&om(2 * m as i64));
                    ensure(lhs == rhs, || format!("w^m z exchange, k={k} m={m} n={n}"))?;
                }
                count += 3;
            }
        }
        let q_n = qe(n)?;
        for i in 1..=n {
            ensure(&q_n * &z(i)? == &z(i)? * &q_n && &q_n * &w(i)? == &w(i)? * &q_n, || format!("Q_n central, n={n}"))?;
            count += 1;
        }
    }
    Ok(count)
}

fn engine_integrity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let words = 250;
    for _ in 0..words {
        let n = rng.gen_range(1..=4);
        let word = random_word(&mut rng, n);
        let left = lift(normal_order_with(&word, n, Strategy::Leftmost))?;
        let right = lift(normal_order_with(&word, n, Strategy::Rightmost))?;
        ensure(left == right, || format!("strategies disagree on {word}"))?;
        let mut prod = ZElement::one(n);
        for g in &word.0 {
            prod = &prod * &lift(gen_element(g, n))?;
        }
        ensure(prod == left, || format!("product disagrees with rewriting on {word}"))?;
    }
    let identities = identity_suite()?;

    let g = XYGenerators::new();
    let mut xs = Vec::new();
    for e in boxes(5, 2) {
        let factors = [g.x1.pow(e[0]), g.x2.pow(e[1]), g.x2s.pow(e[2]), g.x1s.pow(e[3]), g.q_prime.pow(e[4])];
        xs.push(factors.iter().fold(ZElement::one(3), |acc, f| &acc * f));
    }
    let mut ys = Vec::new();
    for e in boxes(4, 2) {
        let factors = [g.y1.pow(e[0]), g.y2.pow(e[1]), g.y2s.pow(e[2]), g.y1s.pow(e[3])];
        ys.push(factors.iter().fold(ZElement::one(2), |acc, f| &acc * f));
    }
    for (name, vectors) in [("X", &xs), ("Y", &ys)] {
        let mut monos: Vec<ExponentPair> = vectors.iter().flat_map(|v| v.terms().map(|(m, _)| m.clone())).collect();
        monos.sort();
        monos.dedup();
        let rows: Vec<Vec<QRat>> = vectors.iter().map(|v| monos.iter().map(|m| v.coeff(m)).collect()).collect();
        let r = rank(&rows, monos.len());
        ensure(r == vectors.len(), || format!("{name} monomials have rank {r} of {}", vectors.len()))?;
    }
    Ok(format!(
        "{words} random words confluent, {identities} identities, {} X and {} Y monomials independent",
        xs.len(),
        ys.len()
    ))
}

fn jacobi_closed_norm(m: i64, al: i64, be: i64, b: i64) -> QRat {
    om(b) * qp(b * m * (al + 1)) / om(b * (al + be + 2 * m + 1)) * qpoch(b, b, m as usize) * qpoch(b, b, (be + m) as usize)
        / (qpoch(b * (al + 1), b, m as usize) * qpoch(b * (al + 1), b, (be + m) as usize))
}

fn q_special_functions() -> Check {
    let mut count = 0;
    for base in [1i64, 2] {
        for al in 0..=3i64 {
            for be in 0..=3i64 {
                let weight = &UniPoly::monomial(QRat::one(), al as usize) * &UniPoly::x_pochhammer(base, base, be as usize);
                let ps: Vec<UniPoly> = (0..=3).map(|m| lift(little_q_jacobi(m, al, be, base))).collect::<Result<_, _>>()?;
                for l in 0..=3usize {
                    for m in 0..=3usize {
                        let v = jackson_integral(&(&(&ps[l] * &ps[m]) * &weight), base);
                        let want = if l == m { jacobi_closed_norm(m as i64, al, be, base) } else { QRat::zero() };
                        ensure(v == want, || format!("base q^{base} α={al} β={be} l={l} m={m}: {v} != {want}"))?;
                        count += 1;
                    }
                }
            }
        }
    }
    for a in 0..=4usize {
        for b in 0..=4usize {
            let integrand = &UniPoly::monomial(QRat::one(), a) * &UniPoly::x_pochhammer(1, 1, b);
            let want = om(1) * qpoch(1, 1, a) * qpoch(1, 1, b) / qpoch(1, 1, a + b + 1);
            ensure(jackson_integral(&integrand, 1) == want, || format!("q-beta a={a} b={b}"))?;
            count += 1;
        }
    }
    let fs = [
        UniPoly::one(),
        UniPoly::from_coeffs(vec![QRat::from(2), qp(-1)]),
        UniPoly::from_coeffs(vec![qp(1), QRat::zero(), QRat::from(-2)]),
        UniPoly::from_coeffs(vec![QRat::zero(), om(2), QRat::from(5), qp(-3)]),
    ];
    for f in &fs {
        for al in 0..=3 {
            for be in 0..=3 {
                for base in [1, 2] {
                    ensure(shift_identity_check(f, al, be, base), || format!("shift identity f={f} α={al} β={be}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} exact identities"))
}

fn positivity() -> Check {
    let mut checked = 0;
    for (l, m, n) in [(1, 1, 2usize), (1, 0, 3)] {
        let elems: Vec<ZElement> = basis(l, m, n).into_iter().map(|p| ZElement::monomial(p, QRat::one())).collect();
        let gram = lift(gram_matrix(&elems))?;
        for (a, b) in [(1, 2), (3, 4)] {
            let q = BigRational::new(a.into(), b.into());
            ensure(lift(positive_definite_at(&gram, &q))?, || format!("Z_{n}({l},{m}) Gram not positive at q={q}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} Gram matrices positive definite"))
}

/// A deliberately unoptimized reference implementation of `Z_n`: every
/// product concatenates the two normal words and rewrites the result one
/// adjacent swap at a time. Exchange swaps `w z` are resolved before
/// reordering within a family, and pending words are processed first in,
/// first out without merging.
mod oracle {
    use super::*;

    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    enum Letter {
        Z(usize),
        W(usize),
    }

    fn to_word(m: &ExponentPair) -> Vec<Letter> {
        let mut w = Vec::new();
        for (i, &e) in m.lambda.iter().enumerate() {
            w.extend(std::iter::repeat_n(Letter::Z(i + 1), e as usize));
        }
        for (i, &e) in m.mu.iter().enumerate().rev() {
            w.extend(std::iter::repeat_n(Letter::W(i + 1), e as usize));
        }
        w
    }

    fn redex(w: &[Letter]) -> Option<usize> {
        let pairs = 0..w.len().saturating_sub(1);
        pairs
            .clone()
            .find(|&i| matches!((w[i], w[i + 1]), (Letter::W(_), Letter::Z(_))))
            .or_else(|| {
                pairs.clone().find(|&i| match (w[i], w[i + 1]) {
                    (Letter::Z(a), Letter::Z(b)) => a > b,
                    (Letter::W(a), Letter::W(b)) => a < b,
                    _ => false,
                })
            })
    }

    fn splice(w: &[Letter], i: usize, mid: [Letter; 2]) -> Vec<Letter> {
        [&w[..i], &mid[..], &w[i + 2..]].concat()
    }

    fn reduce(word: Vec<Letter>, n: usize) -> BTreeMap<ExponentPair, QRat> {
        let mut queue = VecDeque::from([(word, QRat::one())]);
        let mut out: BTreeMap<ExponentPair, QRat> = BTreeMap::new();
        while let Some((w, c)) = queue.pop_front() {
            let Some(i) = redex(&w) else {
                let mut m = ExponentPair::unit(n);
                for l in &w {
                    match *l {
                        Letter::Z(j) => m.lambda[j - 1] += 1,
                        Letter::W(j) => m.mu[j - 1] += 1,
                    }
                }
                let slot = out.entry(m).or_insert_with(QRat::zero);
                *slot = &*slot + &c;
                continue;
            };
            match (w[i], w[i + 1]) {
                (Letter::W(a), Letter::Z(b)) if a != b => {
                    queue.push_back((splice(&w, i, [Letter::Z(b), Letter::W(a)]), &c * &qp(1)));
                }
                (Letter::W(a), Letter::Z(_)) => {
                    queue.push_back((splice(&w, i, [Letter::Z(a), Letter::W(a)]), c.clone()));
                    for k in 1..a {
                        queue.push_back((splice(&w, i, [Letter::Z(k), Letter::W(k)]), &c * &om(2)));
                    }
                }
                (Letter::Z(a), Letter::Z(b)) => {
                    queue.push_back((splice(&w, i, [Letter::Z(b), Letter::Z(a)]), &c * &qp(-1)));
                }
                (Letter::W(a), Letter::W(b)) => {
                    queue.push_back((splice(&w, i, [Letter::W(b), Letter::W(a)]), &c * &qp(-1)));
                }
                _ => unreachable!("redex only returns reducible pairs"),
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn add_into<K: Ord + Clone>(acc: &mut BTreeMap<K, QRat>, k: &K, c: &QRat) {
        let slot = acc.entry(k.clone()).or_insert_with(QRat::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            acc.remove(k);
        }
    }

    #[derive(Clone, PartialEq, Debug)]
    pub struct Elem {
        pub n: usize,
        pub terms: BTreeMap<ExponentPair, QRat>,
    }

    impl Elem {
        fn mono(n: usize, m: ExponentPair) -> Elem {
            Elem { n, terms: BTreeMap::from([(m, QRat::one())]) }
        }

        pub fn z(i: usize, n: usize) -> Elem {
            let mut m = ExponentPair::unit(n);
            m.lambda[i - 1] = 1;
            Elem::mono(n, m)
        }

        pub fn w(i: usize, n: usize) -> Elem {
            let mut m = ExponentPair::unit(n);
            m.mu[i - 1] = 1;
            Elem::mono(n, m)
        }

        pub fn one(n: usize) -> Elem {
            Elem::mono(n, ExponentPair::unit(n))
        }
    }

    impl NcAlgebra for Elem {
        fn unit_like(&self) -> Self {
            Elem::one(self.n)
        }
        fn add(&self, o: &Self) -> qdisk::Result<Self> {
            let mut t = self.terms.clone();
            for (k, c) in &o.terms {
                add_into(&mut t, k, c);
            }
            Ok(Elem { n: self.n, terms: t })
        }
        fn sub(&self, o: &Self) -> qdisk::Result<Self> {
            self.add(&o.scale(&QRat::from(-1)))
        }
        fn mul(&self, o: &Self) -> qdisk::Result<Self> {
            let mut t = BTreeMap::new();
            for (a, ca) in &self.terms {
                for (b, cb) in &o.terms {
                    let mut word = to_word(a);
                    word.extend(to_word(b));
                    for (m, c) in reduce(word, self.n) {
                        add_into(&mut t, &m, &(&(ca * cb) * &c));
                    }
                }
            }
            Ok(Elem { n: self.n, terms: t })
        }
        fn scale(&self, c: &QRat) -> Self {
            let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).filter(|(_, v)| !v.is_zero()).collect();
            Elem { n: self.n, terms }
        }
    }

    #[derive(Clone, PartialEq, Debug)]
    pub struct Tensor {
        pub terms: BTreeMap<(ExponentPair, ExponentPair), QRat>,
    }

    impl Tensor {
        pub fn pure(x: &Elem, y: &Elem) -> Tensor {
            let mut terms = BTreeMap::new();
            for (a, ca) in &x.terms {
                for (b, cb) in &y.terms {
                    add_into(&mut terms, &(a.clone(), b.clone()), &(ca * cb));
                }
            }
            Tensor { terms }
        }
    }

    impl NcAlgebra for Tensor {
        fn unit_like(&self) -> Self {
            Tensor::pure(&Elem::one(3), &Elem::one(2))
        }
        fn add(&self, o: &Self) -> qdisk::Result<Self> {
            let mut t = self.terms.clone();
            for (k, c) in &o.terms {
                add_into(&mut t, k, c);
            }
            Ok(Tensor { terms: t })
        }
        fn sub(&self, o: &Self) -> qdisk::Result<Self> {
            self.add(&o.scale(&QRat::from(-1)))
        }
        fn mul(&self, o: &Self) -> qdisk::Result<Self> {
            let mut t = BTreeMap::new();
            for ((x1, y1), c1) in &self.terms {
                for ((x2, y2), c2) in &o.terms {
                    let px = Elem::mono(3, x1.clone()).mul(&Elem::mono(3, x2.clone()))?;
                    let py = Elem::mono(2, y1.clone()).mul(&Elem::mono(2, y2.clone()))?;
                    for (a, ca) in &px.terms {
                        for (b, cb) in &py.terms {
                            add_into(&mut t, &(a.clone(), b.clone()), &(&(c1 * c2) * &(ca * cb)));
                        }
                    }
                }
            }
            Ok(Tensor { terms: t })
        }
        fn scale(&self, c: &QRat) -> Self {
            let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).filter(|(_, v)| !v.is_zero()).collect();
            Tensor { terms }
        }
    }
}

fn oracle_sides(l: u32, m: u32, alpha: u32, variant: Variant) -> Result<(oracle::Tensor, oracle::Tensor), String> {
    use oracle::{Elem, Tensor};
    let x1 = Elem::z(2, 3);
    let x2 = Elem::z(3, 3);
    let x1s = Elem::w(2, 3);
    let x2s = Elem::w(3, 3);
    let mut q = Elem::one(3).scale(&QRat::zero());
    for i in 1..=3 {
        q = lift(q.add(&lift(Elem::z(i, 3).mul(&Elem::w(i, 3)))?))?;
    }
    let y1 = Elem::z(1, 2);
    let y2 = Elem::z(2, 2);
    let y1s = Elem::w(1, 2);
    let y2s = Elem::w(2, 2);
    let d = lift(lift(y1.mul(&y1s))?.add(&lift(y2.mul(&y2s))?))?;

    let t = Tensor::pure;
    let (a, b) = match variant {
        Variant::Final => (
            lift(t(&x1, &y1s).scale(&-qp(1)).add(&t(&x2, &y2)))?,
            lift(t(&x1s, &y1).scale(&-qp(1)).add(&t(&x2s, &y2s)))?,
        ),
        Variant::Precursor => (
            lift(t(&x1, &y1).add(&t(&x2, &y2)))?,
            lift(t(&x1s, &y1s).scale(&qp(2)).add(&t(&x2s, &y2s)))?,
        ),
    };
    let lhs = lift(disk_poly(DiskSpec::new(l, m, alpha), &a, &b, &t(&q, &d)))?;

    let inner_c = lift(q.sub(&lift(x2.mul(&x2s))?))?;
    let mut rhs = t(&Elem::one(3), &Elem::one(2)).scale(&QRat::zero());
    for r in 0..=l {
        for s in 0..=m {
            let outer = DiskSpec::new(l - r, m - s, alpha + r + s);
            let left = lift(lift(disk_poly(outer, &x2, &x2s, &q))?.mul(&lift(disk_poly(
                DiskSpec::new(r, s, alpha - 1),
                &x1,
                &x1s,
                &inner_c,
            ))?))?;
            let tail = match variant {
                Variant::Final => {
                    let sign = if (r + s) % 2 == 0 { QRat::one() } else { QRat::from(-1) };
                    lift(lift(y1.pow(s))?.mul(&lift(y1s.pow(r))?))?.scale(&(sign * qp(r as i64 - s as i64)))
                }
                Variant::Precursor => lift(lift(y1.pow(r))?.mul(&lift(y1s.pow(s))?))?,
            };
            let right = lift(lift(disk_poly(outer, &y2, &y2s, &d))?.mul(&tail))?;
            let c = lift(coupling_const(l, m, r, s, alpha))?;
            rhs = lift(rhs.add(&t(&left, &right).scale(&c)))?;
        }
    }
    Ok((lhs, rhs))
}

fn engine_terms(e: &TensorElement) -> BTreeMap<(ExponentPair, ExponentPair), QRat> {
    e.terms().map(|(k, c)| (k.clone(), c.clone())).collect()
}

fn independent_oracle() -> Check {
    let (l, m, alpha) = (1, 1, 1);
    let mut total = 0;
    for variant in [Variant::Final, Variant::Precursor] {
        let (lhs, rhs) = oracle_sides(l, m, alpha, variant)?;
        let e_lhs = engine_terms(&lift(addition_lhs(l, m, alpha, variant))?);
        let e_rhs = engine_terms(&lift(addition_rhs(l, m, alpha, variant))?);
        ensure(lhs.terms == e_lhs, || format!("{variant}: oracle and engine left sides differ"))?;
        ensure(rhs.terms == e_rhs, || format!("{variant}: oracle and engine right sides differ"))?;
        ensure(lhs == rhs, || format!("{variant}: oracle sides differ"))?;
        total += lhs.terms.len() + rhs.terms.len();
    }
    let (final_lhs, _) = oracle_sides(l, m, alpha, Variant::Final)?;
    let (_, precursor_rhs) = oracle_sides(l, m, alpha, Variant::Precursor)?;
    ensure(final_lhs != precursor_rhs, || "mismatched forms compare equal".to_string())?;
    Ok(format!("(alpha,l,m) = (1,1,1), both forms, {total} normal-form terms identical; mismatched forms detected"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("addition formula, final form", || addition_formula(Variant::Final)),
        ("addition formula, precursor form", || addition_formula(Variant::Precursor)),
        ("spherical norms", spherical_norms),
        ("spherical orthogonality", spherical_orthogonality),
        ("associated spherical inner products", assoc_inner_products),
        ("Haar functional consistency", haar_consistency),
        ("invariance suite", invariance_suite),
        ("engine integrity", engine_integrity),
        ("q-special functions", q_special_functions),
        ("positivity samples", positivity),
        ("independent rewriting oracle", independent_oracle),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
