use std::sync::Arc;

use bhl_core::braidedhopf::HopfAlgebraData;
use bhl_core::builtins;
use bhl_core::comodcat::Comodule;
use bhl_core::gradedcat::{Degree, GradedMorphism as Mor, GradedObject};
use bhl_core::{Cyclotomic, Field, Rational};
use proptest::prelude::*;

fn object<K: Field>(h: &HopfAlgebraData<K>, degs: &[Degree]) -> GradedObject<K> {
    let n = h.ctx().group().order();
    GradedObject::new(h.ctx(), degs.iter().enumerate().map(|(i, &d)| (format!("x{i}"), d % n)).collect()).unwrap()
}

/// A comodule built from the regular and trivial ones by the operations
/// under test, chosen by `recipe`.
fn build<K: Field>(h: &Arc<HopfAlgebraData<K>>, x: &GradedObject<K>, recipe: u8) -> Comodule<K> {
    let reg = Comodule::regular(h.clone());
    let triv = Comodule::trivial(h.clone(), x).unwrap();
    match recipe % 6 {
        0 => reg.act(x).unwrap(),
        1 => triv.tensor(&reg).unwrap(),
        2 => reg.tensor(&triv).unwrap(),
        3 => reg.dual().unwrap(),
        4 => reg.direct_sum(&triv).unwrap(),
        _ => triv.dual().unwrap().tensor(&reg.act(x).unwrap()).unwrap(),
    }
}

fn comodule_invariants<K: Field>(h: HopfAlgebraData<K>, degs: &[Degree], r1: u8, r2: u8) -> Result<(), TestCaseError> {
    let h = Arc::new(h);
    let x = object(&h, degs);
    let a = build(&h, &x, r1);
    let b = build(&h, &x, r2);
    let ca = a.check().unwrap();
    prop_assert!(ca.passed(), "{:?}", ca.failures());
    // Every basis map of Hom(A, B) is colinear, and composing with the
    // identity keeps it colinear.
    let homs = a.hom_basis(&b).unwrap();
    prop_assert_eq!(homs.len(), a.hom_space(&b).unwrap().cols());
    for f in homs.iter().take(4) {
        prop_assert!(a.colinearity(&b, f).unwrap().passed);
        let g = f.compose(&Mor::identity(&a.carrier)).unwrap();
        prop_assert!(a.colinearity(&b, &g).unwrap().passed);
    }
    // The coaction is colinear into the cofree comodule H ◁ A.
    let cofree = Comodule::regular(h.clone()).act(&a.carrier).unwrap();
    prop_assert!(a.colinearity(&cofree, &a.coaction).unwrap().passed);
    // Hom(1, regular) is the coinvariants of H: one-dimensional.
    let unit = Comodule::unit(h.clone());
    prop_assert_eq!(unit.hom_basis(&Comodule::regular(h.clone())).unwrap().len(), 1);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sweedler_comodules(degs in prop::collection::vec(0usize..4, 1..=2), r1 in 0u8..6, r2 in 0u8..6) {
        comodule_invariants(builtins::sweedler::<Rational>().unwrap(), &degs, r1, r2)?;
    }

    #[test]
    fn exterior_line_comodules(degs in prop::collection::vec(0usize..2, 1..=2), r1 in 0u8..6, r2 in 0u8..6) {
        comodule_invariants(builtins::exterior_line::<Rational>().unwrap(), &degs, r1, r2)?;
    }

    #[test]
    fn nichols_comodules(degs in prop::collection::vec(0usize..3, 1..=2), r1 in 0u8..6, r2 in 0u8..6) {
        comodule_invariants(builtins::nichols_cyclic::<Cyclotomic>(3).unwrap(), &degs, r1, r2)?;
    }

    #[test]
    fn group_algebra_comodules(degs in prop::collection::vec(0usize..1, 1..=3), r1 in 0u8..6, r2 in 0u8..6) {
        comodule_invariants(builtins::group_algebra::<Rational>(3).unwrap(), &degs, r1, r2)?;
    }

    #[test]
    fn hopf_axioms_are_stable_under_rebuilding(p in prop::sample::select(vec![2u32, 3, 5])) {
        let a = builtins::nichols_cyclic::<Cyclotomic>(p).unwrap();
        let b = builtins::nichols_cyclic::<Cyclotomic>(p).unwrap();
        prop_assert!(a.same_structure(&b));
        prop_assert!(a.check().unwrap().passed());
    }
}
