//! The braided category of finite-dimensional vector spaces graded by a
//! finite abelian group, braided by a bicharacter.
//!
//! The category is strict: iterated tensor products are left-associated with
//! lexicographic basis order, and associators and unitors are identities.

mod coherence;
mod duality;
mod group;
mod morphism;
mod object;

pub use coherence::check_braiding_axioms;
pub use duality::{left_dual, phi_left, phi_right, psi, psi_bar, right_dual, Dual};
pub use group::{AbelianGroup, Bicharacter, Degree};
pub use morphism::{DirectSum, GradedMorphism};
pub use object::{Context, GradedObject};
