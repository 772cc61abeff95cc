//! Exact symbolic computation in the q-deformed polynomial algebras `Z_n` on
//! `C^n`, their invariant functional, zonal and associated spherical
//! elements, and machine verification of the addition formula for q-disk
//! polynomials.
//!
//! Every coefficient is an exact element of `Q(q)` ([`qfield::QRat`]), so all
//! identities are checked for exact equality, never to a tolerance.
//!
//! ```
//! use qdisk::cli::parse_element;
//! use qdisk::diskpoly::spherical;
//! use qdisk::haar::{inner, norm_const, NormConstSpec};
//! use qdisk::tensor::{verify_addition, Variant};
//!
//! let x = parse_element("w[2]*z[2]", 2)?;
//! assert_eq!(x.to_string(), "z[2]*w[2] + (1 - q^2)*z[1]*w[1]");
//!
//! let s = spherical(2, 1, 3)?;
//! assert_eq!(inner(&s, &s)?, norm_const(NormConstSpec::new(2, 1, 1)));
//!
//! let verdict = verify_addition(2, 1, 3, Variant::Final)?;
//! assert!(verdict.pass);
//! # Ok::<(), qdisk::Error>(())
//! ```

pub mod cli;
pub mod diskpoly;
pub mod error;
pub mod haar;
pub mod qfield;
pub mod qfunc;
pub mod tensor;
pub mod uqaction;
pub mod zalgebra;

pub use error::{Error, Result};
pub use qfield::QRat;
