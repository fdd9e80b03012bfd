//! Catalog of example Hopf algebras used as oracles.

use std::sync::Arc;

use crate::braidedhopf::{bosonize, group_hopf_algebra, BialgebraData, HopfAlgebraData, YDModuleData};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};
use crate::gradedcat::{AbelianGroup, Context, GradedMorphism as Mor, GradedObject};

/// Names accepted by [`build`].
pub const BUILTIN_NAMES: &[&str] = &["group_algebra", "sweedler", "exterior_line", "nichols_cyclic", "taft"];

/// Cyclotomic order of the field a builtin lives over.
pub fn field_order(name: &str, params: &[i64]) -> Result<u32> {
    match name {
        "group_algebra" | "sweedler" => Ok(1),
        "exterior_line" => Ok(2),
        "nichols_cyclic" | "taft" => Ok(prime_param(name, params)? as u32),
        _ => Err(Error::UnknownBuiltin(name.into())),
    }
}

fn prime_param(name: &str, params: &[i64]) -> Result<i64> {
    let p = match params {
        [p] => *p,
        _ => return Err(Error::InvalidParameter(format!("{name} takes one parameter p"))),
    };
    if p < 2 || (2..p).any(|d| d * d <= p && p % d == 0) {
        return Err(Error::InvalidParameter(format!("{name}: p = {p} is not prime")));
    }
    if p > 31 {
        return Err(Error::InvalidParameter(format!("{name}: p = {p} is too large")));
    }
    Ok(p)
}

/// Builds a catalog entry and verifies its full axiom suite.
pub fn build<K: Field>(name: &str, params: &[i64]) -> Result<HopfAlgebraData<K>> {
    let h = match name {
        "group_algebra" => {
            if params.is_empty() || params.iter().any(|&n| n < 1 || n > 64) {
                return Err(Error::InvalidParameter(
                    "group_algebra takes invariant factors between 1 and 64".into(),
                ));
            }
            let g = AbelianGroup::new(params.iter().map(|&n| n as u32).collect())?;
            group_hopf_algebra(1, &g)?
        }
        "sweedler" => {
            no_params(name, params)?;
            sweedler()?
        }
        "exterior_line" => {
            no_params(name, params)?;
            exterior_line()?
        }
        "nichols_cyclic" => nichols_cyclic(prime_param(name, params)? as u32)?,
        "taft" => taft(prime_param(name, params)? as u32)?,
        _ => return Err(Error::UnknownBuiltin(name.into())),
    };
    let report = h.check()?;
    if let Some(bad) = report.failures().first() {
        return Err(Error::InvalidStructure(format!("builtin {name} fails {}", bad.name)));
    }
    Ok(h)
}

fn no_params(name: &str, params: &[i64]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} takes no parameters")))
    }
}

/// Assembles a Hopf algebra from structure-constant closures on a basis of
/// `dim` vectors. `mult(a, b)` and `comult(a)` return sparse expansions.
#[allow(clippy::too_many_arguments)]
fn assemble<K: Field>(
    carrier: GradedObject<K>,
    mult: impl Fn(usize, usize) -> Vec<(usize, K)>,
    unit: usize,
    comult: impl Fn(usize) -> Vec<((usize, usize), K)>,
    counit: impl Fn(usize) -> K,
    antipode: impl Fn(usize) -> Vec<(usize, K)>,
) -> Result<HopfAlgebraData<K>> {
    let n = carrier.dim();
    let ctx = carrier.ctx().clone();
    let hh = carrier.tensor(&carrier)?;
    let one = GradedObject::unit(&ctx);
    let mut m = Matrix::zeros(n, n * n);
    let mut d = Matrix::zeros(n * n, n);
    let mut s = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            for (c, v) in mult(a, b) {
                m.set(c, a * n + b, v);
            }
        }
        for ((p, q), v) in comult(a) {
            d.set(p * n + q, a, v);
        }
        for (c, v) in antipode(a) {
            s.set(c, a, v);
        }
    }
    let mut u = Matrix::zeros(n, 1);
    u.set(unit, 0, K::one());
    let eps = Matrix::from_fn(1, n, |_, a| counit(a));
    let b = BialgebraData::from_maps(
        carrier.clone(),
        Mor::new(&hh, &carrier, m)?,
        Mor::new(&one, &carrier, u)?,
        Mor::new(&carrier, &hh, d)?,
        Mor::new(&carrier, &one, eps)?,
    )?;
    HopfAlgebraData::new(b, Mor::new(&carrier, &carrier, s)?)
}

/// The group algebra of `Z/n` over the rationals.
pub fn group_algebra<K: Field>(n: u32) -> Result<HopfAlgebraData<K>> {
    group_hopf_algebra(1, &AbelianGroup::cyclic(n)?)
}

/// Sweedler's four-dimensional Hopf algebra over the rationals: basis
/// `1, g, x, xg` with `g² = 1`, `x² = 0`, `gx = -xg`, `Δg = g⊗g`,
/// `Δx = x⊗1 + g⊗x`, `S(g) = g`, `S(x) = -gx = xg`.
pub fn sweedler<K: Field>() -> Result<HopfAlgebraData<K>> {
    let ctx = Context::vect(1)?;
    let carrier = GradedObject::new(
        &ctx,
        ["1", "g", "x", "xg"].iter().map(|l| (l.to_string(), 0)).collect(),
    )?;
    // Basis vector x^b g^a sits at index 2b + a.
    let k = |n: i64| K::from_i64(n);
    let mult = |p: usize, q: usize| {
        let (b, a) = (p / 2, p % 2);
        let (d, c) = (q / 2, q % 2);
        if b + d >= 2 {
            return vec![];
        }
        // x^b g^a x^d g^c = (-1)^{ad} x^{b+d} g^{a+c}
        let sign = if a * d % 2 == 1 { -1 } else { 1 };
        vec![(2 * (b + d) + (a + c) % 2, k(sign))]
    };
    let comult = |p: usize| match p {
        0 => vec![((0, 0), k(1))],
        1 => vec![((1, 1), k(1))],
        2 => vec![((2, 0), k(1)), ((1, 2), k(1))],
        _ => vec![((3, 1), k(1)), ((0, 3), k(1))],
    };
    let counit = |p: usize| if p < 2 { k(1) } else { k(0) };
    let antipode = |p: usize| match p {
        0 => vec![(0, k(1))],
        1 => vec![(1, k(1))],
        2 => vec![(3, k(1))],
        _ => vec![(2, k(-1))],
    };
    assemble(carrier, mult, 0, comult, counit, antipode)
}

/// The exterior algebra on one odd generator `x` in super vector spaces
/// (`Z/2`-graded, `χ(1,1) = -1`), with `x` primitive and `S(x) = -x`.
pub fn exterior_line<K: Field>() -> Result<HopfAlgebraData<K>> {
    exterior_line_in(Context::cyclic(2, 2, 1)?)
}

/// The exterior-line structure constants in an arbitrary `Z/2` context,
/// used to show that the braiding sign is essential.
pub fn exterior_line_in<K: Field>(ctx: Context<K>) -> Result<HopfAlgebraData<K>> {
    let carrier = GradedObject::new(&ctx, vec![("1".into(), 0), ("x".into(), 1)])?;
    let k = |n: i64| K::from_i64(n);
    let mult = |a: usize, b: usize| if a + b < 2 { vec![(a + b, k(1))] } else { vec![] };
    let comult = |a: usize| match a {
        0 => vec![((0, 0), k(1))],
        _ => vec![((1, 0), k(1)), ((0, 1), k(1))],
    };
    let counit = |a: usize| if a == 0 { k(1) } else { k(0) };
    let antipode = |a: usize| vec![(a, k(if a == 0 { 1 } else { -1 }))];
    assemble(carrier, mult, 0, comult, counit, antipode)
}

/// Braided binomial coefficients `c(k, j)` with
/// `Δ(x^k) = Σ_j c(k, j) x^j ⊗ x^{k-j}` for a primitive `x` with
/// `σ(x ⊗ x) = q x ⊗ x`: `c(k+1, j) = c(k, j) + q^{k+1-j} c(k, j-1)`.
pub fn braided_binomials<K: Field>(q: &K, max: usize) -> Vec<Vec<K>> {
    let mut powers = vec![K::one()];
    for i in 1..=max {
        powers.push(powers[i - 1].mul_ref(q));
    }
    let mut c: Vec<Vec<K>> = vec![vec![K::one()]];
    for k in 0..max {
        let prev = &c[k];
        let row: Vec<K> = (0..=k + 1)
            .map(|j| {
                let mut v = if j <= k { prev[j].clone() } else { K::zero() };
                if j >= 1 {
                    v.add_mul_assign(&powers[k + 1 - j], &prev[j - 1]);
                }
                v
            })
            .collect();
        c.push(row);
    }
    c
}

/// The Nichols algebra `k[x]/(x^p)` of a one-dimensional braided vector
/// space in `Vect_{Z/p}` with `χ(1,1) = ζ_p`, over `Q(ζ_p)`. Basis `x^k` in
/// degree `k`; `S(x^k) = (-1)^k ζ_p^{k(k-1)/2} x^k`.
pub fn nichols_cyclic<K: Field>(p: u32) -> Result<HopfAlgebraData<K>> {
    let ctx = Context::<K>::cyclic(p, p, 1)?;
    let n = p as usize;
    let carrier = GradedObject::new(
        &ctx,
        (0..n)
            .map(|k| {
                let l = match k {
                    0 => "1".to_string(),
                    1 => "x".to_string(),
                    _ => format!("x^{k}"),
                };
                (l, k)
            })
            .collect(),
    )?;
    let q = ctx.chi(1, 1).clone();
    let binom = braided_binomials(&q, n - 1);
    let mult = |a: usize, b: usize| if a + b < n { vec![(a + b, K::one())] } else { vec![] };
    let comult = |a: usize| (0..=a).map(|j| ((j, a - j), binom[a][j].clone())).collect();
    let counit = |a: usize| if a == 0 { K::one() } else { K::zero() };
    let antipode = |a: usize| {
        let e = (a * a.saturating_sub(1) / 2) as i64;
        let mut v = ctx.root_of_unity(p, e).expect("root in field");
        if a % 2 == 1 {
            v = v.neg_ref();
        }
        vec![(a, v)]
    };
    assemble(carrier, mult, 0, comult, counit, antipode)
}

/// The Taft algebra of dimension `p²`, as the bosonization of
/// [`nichols_cyclic`].
pub fn taft<K: Field>(p: u32) -> Result<HopfAlgebraData<K>> {
    Ok(bosonize(&nichols_cyclic::<K>(p)?)?.hopf)
}

/// Three two-dimensional Yetter-Drinfeld modules over `kZ/2`:
/// `v0` of degree 1 with trivial action and `v1` of degree `g` on which `g`
/// acts by `-1`; a module of degree `g` on which `g` swaps the basis; and a
/// module of degree 1 on which `g` swaps the basis.
pub fn cyclic_yd_examples<K: Field>() -> Result<Vec<YDModuleData<K>>> {
    let h = Arc::new(group_algebra::<K>(2)?);
    let ctx = h.ctx().clone();
    let v = GradedObject::new(&ctx, vec![("v0".into(), 0), ("v1".into(), 0)])?;
    let hv = h.carrier().tensor(&v)?;
    let k = |n: i64| K::from_i64(n);
    // (coaction group elements for v0, v1; action matrix of g)
    let specs: [([usize; 2], [[i64; 2]; 2]); 3] = [
        ([0, 1], [[1, 0], [0, -1]]),
        ([1, 1], [[0, 1], [1, 0]]),
        ([0, 0], [[0, 1], [1, 0]]),
    ];
    specs
        .iter()
        .map(|(grades, g_action)| {
            let mut act = Matrix::zeros(2, 4);
            for i in 0..2 {
                act.set(i, i, k(1));
                for j in 0..2 {
                    act.set(i, 2 + j, k(g_action[i][j]));
                }
            }
            let mut co = Matrix::zeros(4, 2);
            for (i, &g) in grades.iter().enumerate() {
                co.set(g * 2 + i, i, k(1));
            }
            YDModuleData::new(
                h.clone(),
                v.clone(),
                Mor::new(&hv, &v, act)?,
                Mor::new(&v, &hv, co)?,
            )
        })
        .collect()
}
