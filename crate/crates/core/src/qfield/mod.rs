//! The coefficient field `Q(q)`: exact rational functions in the
//! indeterminate `q`, q-combinatorial symbols, and exact linear algebra.
//!
//! `q` stays symbolic throughout; numeric values only appear through
//! [`QRat::eval_at`] at rational points.

mod intpoly;
mod linalg;
mod qcomb;
mod qrat;

pub use intpoly::IntPoly;
pub use linalg::{determinant, rank, rref, solve_linear, Field, SolutionSpace};
pub use qcomb::{qnumber, qpoch};
pub use qrat::{qrat_arith, FieldOp, QRat};
