use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Exact scalar field used by every matrix in the engine.
///
/// A value does not carry its field; the cyclotomic order `n` of `Q(ζ_n)` is
/// held by the surrounding context and passed in wherever a root of unity or
/// a parsed literal has to be materialized.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Whether this scalar type can hold every element of `Q(ζ_n)`.
    fn supports_field_order(n: u32) -> bool;

    fn from_rational(q: &Rational) -> Self;

    /// `ζ_n^k` in the field `Q(ζ_field_order)`, where `ζ_n` is the standard
    /// primitive `n`-th root `ζ_field_order^(field_order / n)`.
    fn root_of_unity(field_order: u32, n: u32, k: i64) -> Result<Self>;

    fn inv(&self) -> Result<Self>;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }

    fn div_ref(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.inv()?))
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add_ref(&a.mul_ref(b));
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.sub_ref(&a.mul_ref(b));
    }

    /// Coefficients `c_k` (rational) such that `self = Σ c_k z^k` with
    /// `z = ζ_field_order`, in ascending powers, trailing zeros trimmed.
    fn poly_coeffs(&self) -> Vec<Rational>;
}

/// Reduces `ζ_n^k` to `(m, j)` with `gcd(j, m) = 1`, `0 <= j < m`,
/// so that the value is a primitive `m`-th root of unity.
pub(crate) fn reduce_root(n: u32, k: i64) -> (u32, u32) {
    assert!(n >= 1, "root of unity of order 0");
    let n64 = n as i64;
    let j = k.rem_euclid(n64);
    let g = j.gcd(&n64);
    ((n64 / g) as u32, (j / g) as u32)
}

impl Field for Rational {
    fn supports_field_order(n: u32) -> bool {
        n == 1 || n == 2
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn root_of_unity(_field_order: u32, n: u32, k: i64) -> Result<Self> {
        match reduce_root(n, k) {
            (1, _) => Ok(Rational::one()),
            (2, _) => Ok(-Rational::one()),
            (m, _) => Err(Error::RootOfUnityUnavailable { order: m }),
        }
    }

    fn inv(&self) -> Result<Self> {
        Rational::inv(self)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Rational::add_ref(self, rhs)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Rational::sub_ref(self, rhs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        Rational::mul_ref(self, rhs)
    }

    fn neg_ref(&self) -> Self {
        Rational::neg_ref(self)
    }

    fn poly_coeffs(&self) -> Vec<Rational> {
        if self.is_zero() {
            Vec::new()
        } else {
            vec![self.clone()]
        }
    }
}

/// Renders a scalar as a polynomial in `z` with ascending powers,
/// e.g. `1/2 - z + 3*z^2`; zero renders as `0`.
pub fn format_scalar<K: Field>(x: &K) -> String {
    let coeffs = x.poly_coeffs();
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = if neg { c.neg_ref() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses the format produced by [`format_scalar`]; terms may appear in any
/// order and powers of `z` are reduced in `Q(ζ_field_order)`.
pub fn parse_scalar<K: Field>(s: &str, field_order: u32) -> Result<K> {
    let bad = |why: &str| Error::Parse(format!("invalid scalar {s:?}: {why}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let bytes = compact.as_bytes();
    let mut i = 0;
    if bytes[0] == b'-' || bytes[0] == b'+' {
        negative = bytes[0] == b'-';
        i = 1;
        start = 1;
    }
    while i < bytes.len() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
            terms.push((negative, &compact[start..i]));
            negative = b == b'-';
            start = i + 1;
        }
        i += 1;
    }
    terms.push((negative, &compact[start..]));

    let mut acc = K::zero();
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        let (coeff, power) = match term.find('z') {
            None => (term, 0i64),
            Some(pos) => {
                let (head, tail) = term.split_at(pos);
                let coeff = match head.strip_suffix('*') {
                    Some(c) if !c.is_empty() => c,
                    Some(_) => return Err(bad("dangling '*'")),
                    None if head.is_empty() => "1",
                    None => return Err(bad("expected '*' before z")),
                };
                let power = match &tail[1..] {
                    "" => 1,
                    p => p
                        .strip_prefix('^')
                        .and_then(|p| p.parse::<i64>().ok())
                        .ok_or_else(|| bad("bad exponent"))?,
                };
                (coeff, power)
            }
        };
        let mut c: Rational = coeff.parse().map_err(|_| bad("bad coefficient"))?;
        if neg {
            c = c.neg_ref();
        }
        let value = if power == 0 {
            K::from_rational(&c)
        } else {
            K::from_rational(&c).mul_ref(&K::root_of_unity(field_order, field_order, power)?)
        };
        acc = acc.add_ref(&value);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots() {
        assert_eq!(Rational::root_of_unity(2, 2, 1).unwrap(), -Rational::one());
        assert_eq!(Rational::root_of_unity(2, 2, 2).unwrap(), Rational::one());
        assert_eq!(Rational::root_of_unity(1, 6, 3).unwrap(), -Rational::one());
        assert!(Rational::root_of_unity(3, 3, 1).is_err());
    }

    #[test]
    fn rational_format_round_trip() {
        for s in ["0", "5/6", "-1/2", "7"] {
            let x: Rational = parse_scalar(s, 1).unwrap();
            assert_eq!(format_scalar(&x), s);
        }
        let x: Rational = parse_scalar("1 + z", 2).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn reduce_root_normalizes() {
        assert_eq!(reduce_root(6, 4), (3, 2));
        assert_eq!(reduce_root(4, -1), (4, 3));
        assert_eq!(reduce_root(5, 10), (1, 0));
    }
}
