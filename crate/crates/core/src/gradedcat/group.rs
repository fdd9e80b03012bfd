use crate::error::{Error, Result};

/// Group element, encoded as a mixed-radix index over the invariant
/// factors (first factor most significant). The identity is `0`.
pub type Degree = usize;

/// Finite abelian group `Z/n_1 × … × Z/n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.iter().any(|&n| n == 0) {
            return Err(Error::InvalidCategory("invariant factors must be positive".into()));
        }
        let order = factors.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n as usize));
        if order.is_none_or(|o| o > 1 << 20) {
            return Err(Error::InvalidCategory("group too large".into()));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&n| n as usize).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> Degree {
        0
    }

    pub fn exponents(&self, g: Degree) -> Vec<u32> {
        let mut out = vec![0; self.factors.len()];
        let mut rest = g;
        for (i, &n) in self.factors.iter().enumerate().rev() {
            out[i] = (rest % n as usize) as u32;
            rest /= n as usize;
        }
        out
    }

    /// Element with the given exponents, each reduced modulo its factor.
    pub fn element(&self, exps: &[i64]) -> Result<Degree> {
        if exps.len() != self.factors.len() {
            return Err(Error::InvalidCategory(format!(
                "degree has {} components, group has {}",
                exps.len(),
                self.factors.len()
            )));
        }
        let mut g = 0usize;
        for (&e, &n) in exps.iter().zip(&self.factors) {
            g = g * n as usize + e.rem_euclid(n as i64) as usize;
        }
        Ok(g)
    }

    fn from_exponents(&self, exps: &[u32]) -> Degree {
        exps.iter()
            .zip(&self.factors)
            .fold(0usize, |g, (&e, &n)| g * n as usize + (e % n) as usize)
    }

    pub fn add(&self, a: Degree, b: Degree) -> Degree {
        if self.factors.len() == 1 {
            return (a + b) % self.factors[0] as usize;
        }
        let (ea, eb) = (self.exponents(a), self.exponents(b));
        let sum: Vec<u32> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
        self.from_exponents(&sum)
    }

    pub fn neg(&self, a: Degree) -> Degree {
        let e: Vec<u32> = self
            .exponents(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &n)| (n - x) % n)
            .collect();
        self.from_exponents(&e)
    }

    pub fn sub(&self, a: Degree, b: Degree) -> Degree {
        self.add(a, self.neg(b))
    }

    /// The standard generators `e_i` (skipping trivial factors).
    pub fn generators(&self) -> Vec<Degree> {
        (0..self.factors.len())
            .filter(|&i| self.factors[i] > 1)
            .map(|i| {
                let mut e = vec![0u32; self.factors.len()];
                e[i] = 1;
                self.from_exponents(&e)
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Degree> {
        0..self.order()
    }

    pub fn format(&self, g: Degree) -> String {
        let e = self.exponents(g);
        let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Bicharacter `χ(e_i, e_j) = ζ_n^{E_ij}` on the standard generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicharacter {
    root_order: u32,
    exponents: Vec<Vec<i64>>,
}

impl Bicharacter {
    pub fn new(group: &AbelianGroup, root_order: u32, exponents: Vec<Vec<i64>>) -> Result<Self> {
        if root_order == 0 {
            return Err(Error::InvalidCategory("root order must be positive".into()));
        }
        let k = group.rank();
        if exponents.len() != k || exponents.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidCategory(format!(
                "exponent matrix must be {k}x{k}"
            )));
        }
        let n = root_order as i64;
        for i in 0..k {
            for j in 0..k {
                let e = exponents[i][j];
                let (ni, nj) = (group.factors[i] as i64, group.factors[j] as i64);
                if (ni * e).rem_euclid(n) != 0 || (nj * e).rem_euclid(n) != 0 {
                    return Err(Error::InvalidCategory(format!(
                        "exponent E[{i}][{j}] = {e} is not bilinear on Z/{ni} x Z/{nj} with roots of order {n}"
                    )));
                }
            }
        }
        Ok(Bicharacter {
            root_order,
            exponents,
        })
    }

    pub fn trivial(group: &AbelianGroup) -> Self {
        let k = group.rank();
        Bicharacter {
            root_order: 1,
            exponents: vec![vec![0; k]; k],
        }
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    /// Exponent `e` with `χ(a, b) = ζ_n^e`, reduced into `0..n`.
    pub fn exponent(&self, group: &AbelianGroup, a: Degree, b: Degree) -> i64 {
        let (ea, eb) = (group.exponents(a), group.exponents(b));
        let mut e = 0i64;
        for (i, &x) in ea.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in eb.iter().enumerate() {
                e += x as i64 * y as i64 * self.exponents[i][j];
            }
        }
        e.rem_euclid(self.root_order as i64)
    }
}
