//! Exact arithmetic: sparse polynomials over the integers and rationals,
//! gcd, and canonical rational functions.

mod gcd;
mod poly;
mod ratfunc;
mod var;

pub use gcd::{gcd_int, poly_gcd};
pub use poly::{Coeff, IntPoly, MultiPoly, Poly};
pub use ratfunc::{monomial, RatFunc};
pub use var::{Monomial, Var, MATRIX_FAMILIES};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
