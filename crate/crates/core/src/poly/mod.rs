//! Prime fields, monomials and orders, and sparse multivariate polynomials.

mod field;
mod monomial;
pub mod parse;
#[allow(clippy::module_inception)]
mod poly;
mod ring;

pub use field::Field;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::PolyExpr;
pub use poly::{ring_with_vars, Poly};
pub use ring::{Ring, RingRef};
