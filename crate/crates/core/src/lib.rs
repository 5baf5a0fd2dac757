//! Exact computations around cyclotomic polynomials and vanishing sums of
//! roots of unity.
//!
//! * [`cyclotomic`]: `Φ_n`, its height and flatness, with arithmetic helpers
//!   in [`arith`] and dense integer polynomials in [`poly`].
//! * [`vanish`]: sums of distinct `n`-th roots as exponent sets, minimality,
//!   rotation classes, and enumeration of the minimal classes.
//! * [`transform`]: the 0,1-polynomial `Φ_n^T = f_1 + x^{n/2} f_2` built from a
//!   flat `Φ_n = f_1 - f_2`, the Lam–Leung structure of `Φ_pq`, and checks of
//!   the degree and gap properties of `Φ_{2pq}^T`.
//! * [`search`]: all 0,1-multiples of `Φ_n` up to a degree, the lowest-degree
//!   minimal classes with at least three terms, and the `n = 2pq` conjecture.

pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod poly;
pub mod search;
pub mod transform;
pub mod vanish;

pub use error::{Error, Result};
pub use poly::IntPolynomial;
