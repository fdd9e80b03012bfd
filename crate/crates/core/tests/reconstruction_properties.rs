use std::sync::Arc;

use bhl_core::braidedhopf::HopfAlgebraData;
use bhl_core::builtins;
use bhl_core::coend::{compute_relative_coend, Diagram};
use bhl_core::gradedcat::{Degree, GradedObject};
use bhl_core::reconstruct::verify_reconstruction;
use bhl_core::{Cyclotomic, Field, Rational};
use proptest::prelude::*;

fn probes<K: Field>(h: &HopfAlgebraData<K>, spec: &[(Vec<Degree>, bool)]) -> Vec<GradedObject<K>> {
    let n = h.ctx().group().order();
    spec.iter()
        .enumerate()
        .map(|(p, (degs, use_h))| {
            if *use_h {
                h.carrier().clone()
            } else {
                let basis = degs.iter().enumerate().map(|(i, d)| (format!("p{p}_{i}"), d % n)).collect();
                GradedObject::new(h.ctx(), basis).unwrap()
            }
        })
        .collect()
}

fn probe_specs() -> impl Strategy<Value = Vec<(Vec<Degree>, bool)>> {
    prop::collection::vec((prop::collection::vec(0usize..6, 1..=2), prop::bool::weighted(0.2)), 1..=2)
}

/// With at least one probe in each generating degree, the coend recovers
/// `H` whatever extra probes are added.
fn coend_is_h<K: Field>(h: HopfAlgebraData<K>, extra: &[(Vec<Degree>, bool)]) -> Result<(), TestCaseError> {
    let h = Arc::new(h);
    let mut ps = Diagram::default_probes(&h);
    ps.extend(probes(&h, extra));
    let d = Diagram::with_probes(h.clone(), &ps).unwrap();
    let c = compute_relative_coend(&d).unwrap();
    prop_assert_eq!(c.dim(), h.dim());
    let v = verify_reconstruction(&d).unwrap();
    prop_assert!(v.report.passed(), "{:?}", v.report.failures());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn exterior_line_coend_ignores_extra_probes(extra in probe_specs()) {
        coend_is_h(builtins::exterior_line::<Rational>().unwrap(), &extra)?;
    }

    #[test]
    fn sweedler_coend_ignores_extra_probes(extra in probe_specs()) {
        coend_is_h(builtins::sweedler::<Rational>().unwrap(), &extra)?;
    }

    #[test]
    fn nichols_coend_ignores_extra_probes(extra in probe_specs()) {
        coend_is_h(builtins::nichols_cyclic::<Cyclotomic>(3).unwrap(), &extra)?;
    }
}
