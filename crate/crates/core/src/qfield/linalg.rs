//! Exact Gauss-Jordan elimination over a field.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::QRat;
use crate::error::{Error, Result};

/// The few field operations elimination needs. Implemented for [`QRat`] and
/// for `BigRational` (exact evaluation at a rational point).
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// `o` is never zero when called from this module.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
}

impl Field for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn one() -> Self {
        QRat::one()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

/// Outcome of [`solve_linear`].
#[derive(Clone, Debug, PartialEq)]
pub enum SolutionSpace<F> {
    /// `particular + span(nullspace)` is the full solution set.
    Affine { particular: Vec<F>, nullspace: Vec<Vec<F>> },
    /// The system has no solution.
    Inconsistent,
}

impl<F> SolutionSpace<F> {
    pub fn is_consistent(&self) -> bool {
        matches!(self, SolutionSpace::Affine { .. })
    }

    pub fn nullity(&self) -> Option<usize> {
        match self {
            SolutionSpace::Affine { nullspace, .. } => Some(nullspace.len()),
            SolutionSpace::Inconsistent => None,
        }
    }
}

/// Reduced row-echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = F::one().div(&m[row][col]);
        for c in col..m[row].len() {
            m[row][c] = m[row][c].mul(&inv);
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..m[r].len() {
                    let t = f.mul(&m[row][c]);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solves `system * x = rhs` exactly.
pub fn solve_linear<F: Field>(system: &[Vec<F>], rhs: &[F]) -> Result<SolutionSpace<F>> {
    if system.len() != rhs.len() {
        return Err(Error::InvalidParameter(format!(
            "{} equations but {} right-hand sides",
            system.len(),
            rhs.len()
        )));
    }
    let cols = system.first().map_or(0, Vec::len);
    if system.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidParameter("ragged coefficient matrix".into()));
    }
    let mut aug: Vec<Vec<F>> = system
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug, cols);
    // a pivot-free row with nonzero rhs means 0 = b
    if aug[pivots.len()..].iter().any(|r| !r[cols].is_zero()) {
        return Ok(SolutionSpace::Inconsistent);
    }
    let mut particular = vec![F::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = aug[r][f].neg();
            }
            v
        })
        .collect();
    Ok(SolutionSpace::Affine { particular, nullspace })
}

/// Rank of a matrix with `cols` columns.
pub fn rank<F: Field>(m: &[Vec<F>], cols: usize) -> usize {
    let mut work = m.to_vec();
    rref(&mut work, cols).len()
}

/// Determinant by fraction-producing elimination.
pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return F::zero();
        };
        if p != col {
            a.swap(p, col);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].div(&a[col][col]);
            let (top, bottom) = a.split_at_mut(r);
            for (x, p) in bottom[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *x = x.sub(&f.mul(p));
            }
        }
    }
    det
}
