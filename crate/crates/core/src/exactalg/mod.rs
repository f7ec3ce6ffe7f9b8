//! Exact arithmetic: rationals, sparse multivariate polynomials, rational
//! linear algebra, and fraction-free elimination over polynomial matrices.

mod linalg;
mod poly;
mod polylinalg;
mod rational;

pub use linalg::{rank_and_nullspace, span_includes, RationalMatrix};
pub use poly::{Monomial, Polynomial};
pub use polylinalg::{bareiss_det, make_primitive, polynomial_nullspace, PolyMatrix};
pub use rational::Rational;
