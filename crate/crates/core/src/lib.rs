//! Exact arithmetic for trigonometric numbers `cos(πr)`, `sin(πr)` with
//! rational `r`: cyclotomic polynomials, minimal polynomials, linear
//! (in)dependence over `Q` and real quadratic fields, and the
//! classification of rational triangles whose sides need at most one
//! square root each.

pub mod arith;
pub mod cyclofield;
pub mod cyclotomic;
pub mod error;
pub mod independence;
pub mod linalg;
pub mod minpoly;
pub mod ntheory;
pub mod report;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
