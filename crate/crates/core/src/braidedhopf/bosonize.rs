use super::structures::{BialgebraData, HopfAlgebraData};
use crate::error::Result;
use crate::exactalg::{Field, Matrix};
use crate::gradedcat::{AbelianGroup, Context, Degree, GradedMorphism as Mor, GradedObject};
use crate::report::{Check, CheckReport};

/// Basis label of a group element: `1`, `g`, `g^2`, … for cyclic groups and
/// `g1^a*g2^b` otherwise.
pub fn group_element_label(group: &AbelianGroup, g: Degree) -> String {
    let exps = group.exponents(g);
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| {
            let base = if exps.len() == 1 { "g".to_string() } else { format!("g{}", i + 1) };
            if e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The group Hopf algebra `kG` in ordinary vector spaces over
/// `Q(ζ_field_order)`: grouplike basis, `S(g) = g^{-1}`.
pub fn group_hopf_algebra<K: Field>(field_order: u32, group: &AbelianGroup) -> Result<HopfAlgebraData<K>> {
    let ctx = Context::vect(field_order)?;
    let n = group.order();
    let carrier = GradedObject::new(
        &ctx,
        group.elements().map(|g| (group_element_label(group, g), 0)).collect(),
    )?;
    let hh = carrier.tensor(&carrier)?;
    let unit = GradedObject::unit(&ctx);
    let mut m = Matrix::zeros(n, n * n);
    let mut delta = Matrix::zeros(n * n, n);
    let mut s = Matrix::zeros(n, n);
    for g in 0..n {
        for h in 0..n {
            m.set(group.add(g, h), g * n + h, K::one());
        }
        delta.set(g * n + g, g, K::one());
        s.set(group.neg(g), g, K::one());
    }
    let mut u = Matrix::zeros(n, 1);
    u.set(0, 0, K::one());
    let eps = Matrix::from_fn(1, n, |_, _| K::one());
    let b = BialgebraData::from_maps(
        carrier.clone(),
        Mor::new(&hh, &carrier, m)?,
        Mor::new(&unit, &carrier, u)?,
        Mor::new(&carrier, &hh, delta)?,
        Mor::new(&carrier, &unit, eps)?,
    )?;
    HopfAlgebraData::new(b, Mor::new(&carrier, &carrier, s)?)
}

/// Result of bosonizing a Hopf algebra in `Vect_G^χ` with `kG`.
#[derive(Clone, Debug)]
pub struct Bosonization<K: Field> {
    /// `R # kG` in ordinary vector spaces, basis `r#g` at `r * |G| + g`.
    pub hopf: HopfAlgebraData<K>,
    pub group_algebra: HopfAlgebraData<K>,
    /// `π(r#g) = ε(r) g`
    pub projection: Mor<K>,
    /// `ι(g) = 1#g`
    pub inclusion: Mor<K>,
}

/// Radford biproduct `R # kG` for `R` a Hopf algebra in `Vect_G^χ`, where
/// `kG` acts by `g·r = χ(g, |r|) r` and coacts by `r ↦ |r| ⊗ r`:
///
/// - `(r#g)(r'#g') = χ(g, |r'|) rr' # gg'`
/// - `Δ(r#g) = Σ r₍₁₎ # |r₍₂₎|g ⊗ r₍₂₎ # g`
/// - `ε(r#g) = ε(r)`, unit `1#1`, antipode solved from the convolution
///   identity.
pub fn bosonize<K: Field>(r: &HopfAlgebraData<K>) -> Result<Bosonization<K>> {
    let rctx = r.ctx();
    let group = rctx.group().clone();
    let kg = group_hopf_algebra::<K>(rctx.field_order(), &group)?;
    let ctx = kg.ctx().clone();
    let gn = group.order();
    let rc = r.carrier();
    let dr = rc.dim();
    let n = dr * gn;
    let idx = |a: usize, g: Degree| a * gn + g;

    let carrier = GradedObject::new(
        &ctx,
        (0..dr)
            .flat_map(|a| {
                let group = &group;
                (0..gn).map(move |g| (format!("{}#{}", rc.label(a), group_element_label(group, g)), 0))
            })
            .collect(),
    )?;
    let hh = carrier.tensor(&carrier)?;
    let unit = GradedObject::unit(&ctx);

    let mr = r.m().matrix();
    let mut m = Matrix::zeros(n, n * n);
    for a in 0..dr {
        for g in 0..gn {
            for b in 0..dr {
                let twist = rctx.chi(g, rc.degree(b));
                for h in 0..gn {
                    let col = idx(a, g) * n + idx(b, h);
                    for e in 0..dr {
                        let c = mr.get(e, a * dr + b);
                        if !c.is_zero() {
                            m.set(idx(e, group.add(g, h)), col, c.mul_ref(twist));
                        }
                    }
                }
            }
        }
    }

    let ur = r.u().matrix();
    let mut u = Matrix::zeros(n, 1);
    for e in 0..dr {
        u.set(idx(e, 0), 0, ur.get(e, 0).clone());
    }

    let dl = r.delta().matrix();
    let mut delta = Matrix::zeros(n * n, n);
    for a in 0..dr {
        for g in 0..gn {
            for p in 0..dr {
                for q in 0..dr {
                    let c = dl.get(p * dr + q, a);
                    if !c.is_zero() {
                        let left = idx(p, group.add(rc.degree(q), g));
                        let right = idx(q, g);
                        delta.set(left * n + right, idx(a, g), c.clone());
                    }
                }
            }
        }
    }

    let er = r.eps().matrix();
    let eps = Matrix::from_fn(1, n, |_, c| er.get(0, c / gn).clone());

    let bialgebra = BialgebraData::from_maps(
        carrier.clone(),
        Mor::new(&hh, &carrier, m)?,
        Mor::new(&unit, &carrier, u)?,
        Mor::new(&carrier, &hh, delta)?,
        Mor::new(&carrier, &unit, eps)?,
    )?;
    let hopf = HopfAlgebraData::from_bialgebra(bialgebra)?;

    let kgc = kg.carrier().clone();
    let proj = Matrix::from_fn(gn, n, |g, c| {
        if c % gn == g {
            er.get(0, c / gn).clone()
        } else {
            K::zero()
        }
    });
    let incl = Matrix::from_fn(n, gn, |c, g| {
        if c % gn == g {
            ur.get(c / gn, 0).clone()
        } else {
            K::zero()
        }
    });
    Ok(Bosonization {
        projection: Mor::new(&carrier, &kgc, proj)?,
        inclusion: Mor::new(&kgc, &carrier, incl)?,
        hopf,
        group_algebra: kg,
    })
}

/// Checks that `f: A → B` preserves product, unit, coproduct, counit and
/// antipode.
pub fn check_hopf_morphism<K: Field>(
    f: &Mor<K>,
    a: &HopfAlgebraData<K>,
    b: &HopfAlgebraData<K>,
) -> Result<CheckReport<K>> {
    let mut r = CheckReport::new();
    r.push(Check::morphisms(
        "preserves_product",
        &f.compose(a.m())?,
        &b.m().compose(&f.tensor(f)?)?,
    ));
    r.push(Check::morphisms("preserves_unit", &f.compose(a.u())?, b.u()));
    r.push(Check::morphisms(
        "preserves_coproduct",
        &b.delta().compose(f)?,
        &f.tensor(f)?.compose(a.delta())?,
    ));
    r.push(Check::morphisms("preserves_counit", &b.eps().compose(f)?, a.eps()));
    r.push(Check::morphisms(
        "preserves_antipode",
        &f.compose(a.s())?,
        &b.s().compose(f)?,
    ));
    Ok(r)
}

impl<K: Field> Bosonization<K> {
    /// `π ∘ ι = id` and both maps are Hopf algebra maps.
    pub fn check_projection(&self) -> Result<CheckReport<K>> {
        let mut r = CheckReport::new();
        r.push(Check::morphisms(
            "projection_after_inclusion",
            &self.projection.compose(&self.inclusion)?,
            &Mor::identity(self.group_algebra.carrier()),
        ));
        r.extend_prefixed(
            "projection",
            check_hopf_morphism(&self.projection, &self.hopf, &self.group_algebra)?,
        );
        r.extend_prefixed(
            "inclusion",
            check_hopf_morphism(&self.inclusion, &self.group_algebra, &self.hopf)?,
        );
        Ok(r)
    }
}
