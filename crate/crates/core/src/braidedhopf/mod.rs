//! Hopf algebras, Yetter-Drinfeld modules and bosonization in `Vect_G^χ`.

mod antipode;
mod bosonize;
mod structures;
mod yd;

pub use antipode::solve_antipode;
pub use bosonize::{bosonize, check_hopf_morphism, group_element_label, group_hopf_algebra, Bosonization};
pub use structures::{AlgebraData, BialgebraData, CoalgebraData, HopfAlgebraData};
pub use yd::{yd_braiding, yd_braiding_inverse, YDModuleData};
