//! Exact arithmetic over small finite fields: elements, polynomials and
//! dense linear algebra.

mod field;
mod matrix;
mod multi;
mod poly;

pub use field::{is_prime, prime_power, Field, FieldElement, MAX_FIELD_SIZE};
pub use matrix::Matrix;
pub use multi::{monomial_eval, FieldJson, MultiPoly, PolyJson, TermJson};
pub use poly::{lagrange_interpolate, Poly};
