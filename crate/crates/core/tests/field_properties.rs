use bhl_core::exactalg::{format_scalar, parse_scalar, totient};
use bhl_core::{Cyclotomic, Field, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

/// Rationals including values past the small-integer fast path.
fn wide_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        rational(),
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| Rational::new(n, d).unwrap()),
    ]
}

fn cyclotomic(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(rational(), totient(order) as usize)
        .prop_map(move |c| Cyclotomic::from_coeffs(order, &c))
}

fn any_cyclotomic() -> impl Strategy<Value = (u32, Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(vec![3u32, 4, 5, 8, 12]).prop_flat_map(|n| (Just(n), cyclotomic(n), cyclotomic(n), cyclotomic(n)))
}

fn field_axioms<K: Field>(a: &K, b: &K, c: &K) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add_ref(b), b.add_ref(a));
    prop_assert_eq!(a.mul_ref(b), b.mul_ref(a));
    prop_assert_eq!(a.add_ref(b).add_ref(c), a.add_ref(&b.add_ref(c)));
    prop_assert_eq!(a.mul_ref(b).mul_ref(c), a.mul_ref(&b.mul_ref(c)));
    prop_assert_eq!(a.mul_ref(&b.add_ref(c)), a.mul_ref(b).add_ref(&a.mul_ref(c)));
    prop_assert_eq!(a.add_ref(&K::zero()), a.clone());
    prop_assert_eq!(a.mul_ref(&K::one()), a.clone());
    prop_assert!(a.add_ref(&a.neg_ref()).is_zero());
    prop_assert_eq!(a.sub_ref(b), a.add_ref(&b.neg_ref()));
    if a.is_zero() {
        prop_assert!(a.inv().is_err());
    } else {
        prop_assert!(a.mul_ref(&a.inv().unwrap()).is_one());
        prop_assert_eq!(b.div_ref(a).unwrap().mul_ref(a), b.clone());
    }
    Ok(())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in wide_rational(), b in wide_rational(), c in wide_rational()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn cyclotomic_field_axioms((_, a, b, c) in any_cyclotomic()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn rationals_mix_with_any_cyclotomic_order((_, a, _, _) in any_cyclotomic(), q in rational()) {
        let qc = Cyclotomic::from_rational(&q);
        prop_assert_eq!(a.mul_ref(&qc), qc.mul_ref(&a));
        prop_assert_eq!(a.add_ref(&qc).sub_ref(&qc), a);
    }

    #[test]
    fn scalar_text_round_trips((n, a, _, _) in any_cyclotomic(), q in wide_rational()) {
        prop_assert_eq!(parse_scalar::<Cyclotomic>(&format_scalar(&a), n).unwrap(), a);
        prop_assert_eq!(parse_scalar::<Rational>(&format_scalar(&q), 1).unwrap(), q);
    }

    #[test]
    fn roots_of_unity_multiply_like_exponents(j in -30i64..30, k in -30i64..30, n in prop::sample::select(vec![3u32, 4, 6, 12])) {
        let z = |e: i64| Cyclotomic::root_of_unity(12, n, e).unwrap();
        prop_assert_eq!(z(j).mul_ref(&z(k)), z(j + k));
        prop_assert!(z(n as i64).is_one());
    }
}

#[test]
fn primitive_cube_root_satisfies_its_minimal_polynomial() {
    let z = Cyclotomic::root_of_unity(3, 3, 1).unwrap();
    let sum = Cyclotomic::one().add_ref(&z).add_ref(&z.mul_ref(&z));
    assert!(sum.is_zero());
}
