//! Exact scalars and dense linear algebra.

mod cyclotomic;
mod echelon;
mod field;
mod linalg;
mod matrix;
mod rational;

pub use cyclotomic::{cyclotomic_poly, totient, Cyclotomic};
pub use echelon::Echelon;
pub use field::{format_scalar, parse_scalar, Field};
pub use linalg::{cokernel, invert, kernel, rref, solve_unknown_map, LinearSystem, QuotientPresentation};
pub use matrix::Matrix;
pub use rational::Rational;
