use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::field::{format_scalar, reduce_root, Field};
use super::rational::Rational;
use crate::error::{Error, Result};

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u32, Rc<Vec<i64>>>> = RefCell::new(HashMap::new());
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // Both monic with integer coefficients, ascending order.
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// The `n`-th cyclotomic polynomial `Φ_n`, ascending integer coefficients.
///
/// Computed by dividing `x^n - 1` by `Φ_d` for every proper divisor `d` of
/// `n`; results are cached per thread.
pub fn cyclotomic_poly(n: u32) -> Rc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = PHI_CACHE.with(|c| c.borrow().get(&n).cloned()) {
        return p;
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    let p = Rc::new(p);
    PHI_CACHE.with(|c| c.borrow_mut().insert(n, p.clone()));
    p
}

/// Euler's totient, the degree of `Φ_n`.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Element of `Q(ζ_n)` stored as a residue modulo `Φ_n` in the power basis
/// `1, z, …, z^{φ(n)-1}` with `z = ζ_n`.
///
/// Rational values are normalized to `order == 1`, so they combine with
/// elements of any cyclotomic field. Mixing two different non-trivial
/// orders is a [`Error::FieldMismatch`]; the operator impls panic on it and
/// the `try_*` methods report it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: SmallVec<[Rational; 2]>,
}

impl Cyclotomic {
    pub fn from_coeffs(order: u32, coeffs: &[Rational]) -> Self {
        let mut out = Cyclotomic {
            order,
            coeffs: coeffs.iter().cloned().collect(),
        };
        out.reduce();
        out
    }

    /// Order `n` of the field this element was last combined in
    /// (1 for rationals).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    fn reduce(&mut self) {
        if self.order > 1 {
            let phi = cyclotomic_poly(self.order);
            let deg = phi.len() - 1;
            while self.coeffs.len() > deg {
                let top = self.coeffs.pop().expect("nonempty");
                if top.is_zero() {
                    continue;
                }
                let base = self.coeffs.len() - deg;
                for (i, &c) in phi[..deg].iter().enumerate() {
                    if c != 0 {
                        let t = top.mul_ref(&Rational::from_integer(c));
                        self.coeffs[base + i] = self.coeffs[base + i].sub_ref(&t);
                    }
                }
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.len() <= 1 {
            self.order = 1;
        }
    }

    fn common_order(&self, rhs: &Self) -> Result<u32> {
        match (self.order, rhs.order) {
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::FieldMismatch { left: a, right: b }),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let order = self.common_order(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs: SmallVec<[Rational; 2]> = SmallVec::with_capacity(n);
        for i in 0..n {
            coeffs.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut out = Cyclotomic { order, coeffs };
        out.reduce();
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.neg_ref())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let order = self.common_order(rhs)?;
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Ok(Self::zero());
        }
        let mut coeffs: SmallVec<[Rational; 2]> =
            SmallVec::from_elem(Rational::zero(), self.coeffs.len() + rhs.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        let mut out = Cyclotomic { order, coeffs };
        out.reduce();
        Ok(out)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.common_order(rhs)?;
        self.try_mul(&Field::inv(rhs)?)
    }

    /// Multiplicative inverse by solving the `φ(n) × φ(n)` multiplication
    /// matrix system `x · self = 1`.
    fn inverse(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Cyclotomic::from_rational(&self.coeffs[0].inv()?));
        }
        let n = self.order;
        let d = totient(n) as usize;
        // Column j of `mult` holds the coefficients of self * z^j.
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(d);
        let mut cur = self.clone();
        let z = Cyclotomic::from_coeffs(n, &[Rational::zero(), Rational::one()]);
        for _ in 0..d {
            let mut c = cur.coeffs.to_vec();
            c.resize(d, Rational::zero());
            cols.push(c);
            cur = cur.try_mul(&z)?;
        }
        // Augmented system [M | e_0], Gauss-Jordan.
        let mut a: Vec<Vec<Rational>> = (0..d)
            .map(|r| {
                let mut row: Vec<Rational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            a.swap(col, piv);
            let inv = a[col][col].inv()?;
            for v in a[col].iter_mut() {
                *v = v.mul_ref(&inv);
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..=d {
                        let t = f.mul_ref(&a[col][c]);
                        a[r][c] = a[r][c].sub_ref(&t);
                    }
                }
            }
        }
        let coeffs: Vec<Rational> = (0..d).map(|r| a[r][d].clone()).collect();
        Ok(Cyclotomic::from_coeffs(n, &coeffs))
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: SmallVec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rational(&Rational::one())
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Field for Cyclotomic {
    fn supports_field_order(_n: u32) -> bool {
        true
    }

    fn from_rational(q: &Rational) -> Self {
        let mut coeffs = SmallVec::new();
        if !q.is_zero() {
            coeffs.push(q.clone());
        }
        Cyclotomic { order: 1, coeffs }
    }

    fn root_of_unity(field_order: u32, n: u32, k: i64) -> Result<Self> {
        let (m, j) = reduce_root(n, k);
        let big = field_order as u64;
        let power = if field_order % m == 0 {
            (field_order / m) as u64 * j as u64
        } else if field_order % 2 == 1 && (2 * field_order) % m == 0 {
            // Q(ζ_n) = Q(ζ_2n) for odd n, with ζ_2n = -ζ_n^((n+1)/2).
            let e = (2 * field_order / m) as u64 * j as u64;
            let half = (field_order as u64 + 1) / 2;
            let base = Self::root_of_unity(field_order, field_order, (half * e % big) as i64)?;
            return Ok(if e % 2 == 1 { base.neg_ref() } else { base });
        } else {
            return Err(Error::RootOfUnityUnavailable { order: m });
        };
        let power = (power % big) as usize;
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = Rational::one();
        Ok(Cyclotomic::from_coeffs(field_order, &coeffs))
    }

    fn inv(&self) -> Result<Self> {
        self.inverse()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }

    fn neg_ref(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect(),
        }
    }

    fn poly_coeffs(&self) -> Vec<Rational> {
        self.coeffs.to_vec()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_scalar(self))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [Q(ζ_{})]", format_scalar(self), self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::parse_scalar;

    fn zeta(n: u32) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, n, 1).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient outside {-1, 0, 1}.
        assert!(cyclotomic_poly(105).contains(&-2));
        for n in 1..40 {
            assert_eq!(cyclotomic_poly(n).len() as u32 - 1, totient(n));
        }
    }

    #[test]
    fn zeta3_relations() {
        let z = zeta(3);
        assert_eq!(z.clone() * z.clone() * z.clone(), Cyclotomic::one());
        assert!((z.clone() * z.clone() + z + Cyclotomic::one()).is_zero());
    }

    #[test]
    fn rationals_inside_cyclotomics() {
        let a = Cyclotomic::from_rational(&Rational::new(1, 2).unwrap());
        let b = Cyclotomic::from_rational(&Rational::new(1, 3).unwrap());
        assert_eq!(a + b, Cyclotomic::from_rational(&Rational::new(5, 6).unwrap()));
        // ζ_4^2 = -1 collapses back to a rational.
        let i = zeta(4);
        let m = i.clone() * i;
        assert!(m.is_rational());
        assert_eq!(m, -Cyclotomic::one());
    }

    #[test]
    fn inverses() {
        let z = zeta(5);
        let x = Cyclotomic::one() + z.clone() + z.clone() * z.clone() * Cyclotomic::from_i64(3);
        let y = Field::inv(&x).unwrap();
        assert_eq!(x * y, Cyclotomic::one());
        assert_eq!(Field::inv(&Cyclotomic::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_mismatch_is_reported() {
        assert_eq!(
            zeta(3).try_add(&zeta(5)),
            Err(Error::FieldMismatch { left: 3, right: 5 })
        );
    }

    #[test]
    fn sixth_roots_in_cubic_field() {
        let w = Cyclotomic::root_of_unity(3, 6, 1).unwrap();
        let mut p = Cyclotomic::one();
        for k in 1..=6 {
            p = p * w.clone();
            assert_eq!(p.is_one(), k == 6, "power {k}");
        }
    }

    #[test]
    fn format_round_trip() {
        let z = zeta(7);
        let x = Cyclotomic::from_rational(&Rational::new(1, 2).unwrap()) - z.clone()
            + z.clone() * z * Cyclotomic::from_i64(3);
        let s = format_scalar(&x);
        assert_eq!(s, "1/2 - z + 3*z^2");
        assert_eq!(parse_scalar::<Cyclotomic>(&s, 7).unwrap(), x);
        // z^3 in Q(ζ_3) reduces to 1.
        assert!(parse_scalar::<Cyclotomic>("z^3", 3).unwrap().is_one());
    }
}
