use bhl_core::exactalg::{cokernel, kernel, rref, solve_unknown_map, Echelon, LinearSystem};
use bhl_core::{Matrix, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn shaped(r: usize, c: usize) -> impl Strategy<Value = Matrix<Rational>> {
    // Mostly small entries with many zeros so that rank deficiency is common.
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c)
        .prop_map(move |v| Matrix::from_vec(r, c, v.into_iter().map(Rational::from_integer).collect()).unwrap())
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| shaped(r, c))
}

/// `(A, X, B)` with `A X B` defined.
fn sandwich() -> impl Strategy<Value = (Matrix<Rational>, Matrix<Rational>, Matrix<Rational>)> {
    (1..=4usize, 1..=3usize, 1..=3usize, 1..=4usize)
        .prop_flat_map(|(ar, xr, xc, bc)| (shaped(ar, xr), shaped(xr, xc), shaped(xc, bc)))
}

fn mul(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
    a.try_mul(b).unwrap()
}

proptest! {
    #[test]
    fn rref_is_idempotent_and_keeps_rank(m in matrix(6, 6)) {
        let (r, pivots) = rref(&m);
        prop_assert_eq!(rref(&r).0, r.clone());
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for (i, &p) in pivots.iter().enumerate() {
            for row in 0..m.rows() {
                let expect = if row == i { Rational::from_integer(1) } else { Rational::from_integer(0) };
                prop_assert_eq!(r.get(row, p), &expect);
            }
        }
    }

    #[test]
    fn kernel_is_annihilated_and_has_full_nullity(m in matrix(6, 7)) {
        let k = kernel(&m);
        prop_assert_eq!(k.cols(), m.cols() - m.rank());
        prop_assert!(mul(&m, &k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn cokernel_projection_kills_the_image(m in matrix(6, 5)) {
        let q = cokernel(&m);
        prop_assert_eq!(q.quotient_dim, m.rows() - m.rank());
        prop_assert!(mul(&q.projection, &m).is_zero());
        prop_assert_eq!(mul(&q.projection, &q.section), Matrix::identity(q.quotient_dim));
        let rel = q.relation_matrix();
        prop_assert_eq!(rel.cols(), m.rank());
        prop_assert_eq!(rel.rank(), m.rank());
        prop_assert!(mul(&q.projection, &rel).is_zero());
    }

    #[test]
    fn incremental_echelon_matches_batch_rref(m in matrix(6, 6)) {
        let mut e = Echelon::new(m.cols());
        for r in (0..m.rows()).rev() {
            e.insert_dense(m.row(r));
        }
        let (r, pivots) = rref(&m);
        prop_assert_eq!(e.pivot_cols(), pivots.clone());
        prop_assert_eq!(e.rref_rows(), r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()));
        // Reducing a row already in the span leaves nothing behind.
        for i in 0..m.rows() {
            prop_assert!(e.reduce_dense(m.row(i)).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trips(m in matrix(5, 5)) {
        if m.rows() == m.cols() && m.rank() == m.rows() {
            let inv = m.inverse().unwrap();
            prop_assert_eq!(mul(&m, &inv), Matrix::identity(m.rows()));
            prop_assert_eq!(mul(&inv, &m), Matrix::identity(m.rows()));
        } else {
            prop_assert!(m.inverse().is_err());
        }
    }

    #[test]
    fn linear_systems_recover_a_planted_solution(m in matrix(6, 4), x in prop::collection::vec(-5i64..5, 4)) {
        let n = m.cols();
        let x: Vec<Rational> = x.into_iter().take(n).map(Rational::from_integer).collect();
        prop_assume!(x.len() == n);
        let mut sys = LinearSystem::new(n);
        for r in 0..m.rows() {
            let coeffs: Vec<(usize, Rational)> = (0..n).map(|c| (c, m.get(r, c).clone())).collect();
            let rhs = (0..n).fold(Rational::from_integer(0), |acc, c| acc.add_ref(&m.get(r, c).mul_ref(&x[c])));
            sys.add_equation(&coeffs, &rhs);
        }
        prop_assert!(sys.is_consistent());
        prop_assert_eq!(sys.nullity(), n - m.rank());
        if m.rank() == n {
            prop_assert_eq!(sys.solve().unwrap(), x);
        } else {
            prop_assert!(sys.solve().is_err());
        }
    }

    #[test]
    fn unknown_maps_are_recovered((a, x, b) in sandwich()) {
        let c = mul(&mul(&a, &x), &b);
        let constraints = vec![(a.clone(), b.clone(), c)];
        let injective = a.rank() == a.cols() && b.rank() == b.rows();
        match solve_unknown_map(&constraints, x.shape()) {
            Ok(found) => prop_assert_eq!(found, x),
            Err(_) => prop_assert!(!injective),
        }
    }
}
