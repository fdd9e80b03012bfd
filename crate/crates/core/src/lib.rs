//! Exact computations with Hopf algebras in braided categories of
//! group-graded vector spaces, including reconstruction of a Hopf algebra
//! from its category of comodules through a relative coend.

pub mod braidedhopf;
pub mod builtins;
pub mod coend;
pub mod comodcat;
pub mod error;
pub mod exactalg;
pub mod gradedcat;
pub mod reconstruct;
pub mod report;

pub use error::{Error, Result};
pub use exactalg::{Cyclotomic, Field, Matrix, Rational};

/// Matrices over the rationals.
pub type QMatrix = Matrix<Rational>;
/// Matrices over cyclotomic fields.
pub type CycloMatrix = Matrix<Cyclotomic>;
