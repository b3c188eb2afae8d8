//! Ideal calculus over prime fields with characteristic-p closure diagnostics.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: prime fields, monomial orders, sparse polynomials, Frobenius powers.
//! - [`groebner`]: reduced Gröbner bases (Buchberger), normal forms, elimination.
//! - [`ideal`]: sums, products, intersections, colons, radical membership,
//!   Krull dimension, ring-map kernels, bracket powers and gradings.
//! - [`presented`]: quotient rings `S/J` with user-supplied minimal primes,
//!   systems of parameters, regular sequences and a Cohen–Macaulay probe.
//! - [`closure`]: decomposition closures (computable lower bounds for tight and
//!   NE closure), closedness tests with witnesses, theorem verdicts, bounded
//!   Frobenius checks, NE test-element assembly and colon-capturing reports.
//! - [`script`]: the `.icl` ideal-calculus language, its runner and the built-in
//!   reproduction scenarios.
//! - [`suites`]: seeded property suites with independent combinatorial oracles.
//!
//! Power-series rings are modelled by their graded polynomial counterparts: the
//! ideal of all variables plays the role of the maximal ideal.

pub mod closure;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod poly;
pub mod presented;
pub mod script;
pub mod suites;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use poly::{Monomial, MonomialOrder, Poly, Ring, RingRef};
pub use presented::PresentedRing;
