//! Left comodules over a Hopf algebra in `Vect_G^χ`, viewed as a monoidal
//! right module category over `Vect_G^χ` with `B ◁ X = B ⊗ X`.

use std::sync::Arc;

use crate::braidedhopf::{CoalgebraData, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::exactalg::{Field, LinearSystem, Matrix};
use crate::gradedcat::{left_dual, Degree, GradedMorphism as Mor, GradedObject};
use crate::report::{Check, CheckReport};

/// A left `H`-comodule `(V, ρ: V → H ⊗ V)`.
#[derive(Clone, Debug)]
pub struct Comodule<K: Field> {
    pub hopf: Arc<HopfAlgebraData<K>>,
    pub carrier: GradedObject<K>,
    pub coaction: Mor<K>,
}

impl<K: Field> Comodule<K> {
    pub fn new(hopf: Arc<HopfAlgebraData<K>>, carrier: GradedObject<K>, coaction: Mor<K>) -> Result<Self> {
        let hv = hopf.carrier().tensor(&carrier)?;
        if !coaction.source().same_shape(&carrier) || !coaction.target().same_shape(&hv) {
            return Err(Error::ShapeMismatch("coaction must be V → H⊗V".into()));
        }
        Ok(Comodule {
            hopf,
            carrier,
            coaction,
        })
    }

    /// `H` coacting on itself by `Δ`.
    pub fn regular(hopf: Arc<HopfAlgebraData<K>>) -> Self {
        let carrier = hopf.carrier().clone();
        let coaction = hopf.delta().clone();
        Comodule {
            hopf,
            carrier,
            coaction,
        }
    }

    /// `ρ = u ⊗ id_V`.
    pub fn trivial(hopf: Arc<HopfAlgebraData<K>>, v: &GradedObject<K>) -> Result<Self> {
        let coaction = hopf.u().tensor(&Mor::identity(v))?;
        Self::new(hopf, v.clone(), coaction)
    }

    pub fn unit(hopf: Arc<HopfAlgebraData<K>>) -> Self {
        let one = GradedObject::unit(hopf.ctx());
        Self::trivial(hopf, &one).expect("unit comodule")
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Coassociativity and counit residuals.
    pub fn check(&self) -> Result<CheckReport<K>> {
        check_coaction(self.hopf.coalgebra(), &self.carrier, &self.coaction)
    }

    fn same_hopf(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.hopf, &other.hopf) || self.hopf.same_structure(&other.hopf) {
            Ok(())
        } else {
            Err(Error::InvalidStructure("comodules over different Hopf algebras".into()))
        }
    }

    /// `ρ_{V⊗W} = (m ⊗ id_{V⊗W})(id_H ⊗ σ_{V,H} ⊗ id_W)(ρ_V ⊗ ρ_W)`.
    pub fn tensor(&self, w: &Self) -> Result<Self> {
        self.same_hopf(w)?;
        let h = self.hopf.carrier();
        let coaction = self
            .hopf
            .m()
            .tensor(&Mor::identity(&self.carrier.tensor(&w.carrier)?))?
            .compose(
                &self
                    .coaction
                    .tensor(&w.coaction)?
                    .then_braid_middle(h, &self.carrier, h, &w.carrier)?,
            )?;
        Self::new(self.hopf.clone(), self.carrier.tensor(&w.carrier)?, coaction)
    }

    /// Left dual comodule with
    /// `ρ_{*V} = ((S ⊗ id) σ_{*V,H} ⊗ ev_V)(id_{*V} ⊗ ρ_V ⊗ id_{*V})(coev_V ⊗ id_{*V})`.
    pub fn dual(&self) -> Result<Self> {
        let h = self.hopf.carrier();
        let d = left_dual(&self.carrier);
        let idd = Mor::identity(&d.object);
        let twisted = self
            .hopf
            .s()
            .tensor(&idd)?
            .compose(&Mor::braiding(&d.object, h)?)?;
        let coaction = Mor::compose_all(&[
            &twisted.tensor(&d.ev)?,
            &Mor::tensor_all(&[&idd, &self.coaction, &idd])?,
            &d.coev.tensor(&idd)?,
        ])?;
        Self::new(self.hopf.clone(), d.object, coaction)
    }

    /// `B ◁ X = B ⊗ X` with coaction `ρ_B ⊗ id_X`.
    pub fn act(&self, x: &GradedObject<K>) -> Result<Self> {
        let coaction = self.coaction.tensor(&Mor::identity(x))?;
        Self::new(self.hopf.clone(), self.carrier.tensor(x)?, coaction)
    }

    pub fn direct_sum(&self, w: &Self) -> Result<Self> {
        self.same_hopf(w)?;
        let carrier = self.carrier.direct_sum(&w.carrier)?;
        let hn = self.hopf.dim();
        let (a, b) = (self.dim(), w.dim());
        let n = a + b;
        let mut m = Matrix::zeros(hn * n, n);
        for h in 0..hn {
            for r in 0..a {
                for c in 0..a {
                    m.set(h * n + r, c, self.coaction.matrix().get(h * a + r, c).clone());
                }
            }
            for r in 0..b {
                for c in 0..b {
                    m.set(h * n + a + r, a + c, w.coaction.matrix().get(h * b + r, c).clone());
                }
            }
        }
        let target = self.hopf.carrier().tensor(&carrier)?;
        Self::new(self.hopf.clone(), carrier.clone(), Mor::new(&carrier, &target, m)?)
    }

    /// Whether two comodules have identical carriers and coactions.
    pub fn same_as(&self, other: &Self) -> bool {
        self.carrier.same_shape(&other.carrier) && self.coaction.matrix() == other.coaction.matrix()
    }

    /// Colinearity residual `ρ_B f − (id_H ⊗ f) ρ_A` of `f: self → b`.
    pub fn colinearity(&self, b: &Self, f: &Mor<K>) -> Result<Check<K>> {
        let lhs = b.coaction.compose(f)?;
        let rhs = Mor::identity(self.hopf.carrier()).tensor(f)?.compose(&self.coaction)?;
        Ok(Check::morphisms("colinear", &lhs, &rhs))
    }

    /// Degrees of `X` when `self` is the cofree comodule `H ◁ X`, i.e. its
    /// coaction is exactly `Δ ⊗ id_X`.
    pub fn cofree_degrees(&self) -> Option<Vec<Degree>> {
        let n = self.hopf.dim();
        let d = self.dim();
        if n == 0 || d % n != 0 {
            return None;
        }
        let m = d / n;
        let delta = self.hopf.delta().matrix();
        let rho = self.coaction.matrix();
        for r in 0..n * d {
            let (hh, k) = (r / m, r % m);
            for c in 0..d {
                let (h2, k2) = (c / m, c % m);
                let expect = if k == k2 { delta.get(hh, h2).clone() } else { K::zero() };
                if rho.get(r, c) != &expect {
                    return None;
                }
            }
        }
        let group = self.hopf.ctx().group();
        let h0 = self.hopf.carrier().degree(0);
        Some((0..m).map(|k| group.sub(self.carrier.degree(k), h0)).collect())
    }

    /// Basis of the colinear maps `self → b`.
    ///
    /// Into a cofree `b = H ◁ X` the maps are `(id_H ⊗ g) ρ` for `g` running
    /// over the elementary degree-preserving maps `self → X`; otherwise the
    /// colinearity equations are solved.
    pub fn hom_basis(&self, b: &Self) -> Result<Vec<Mor<K>>> {
        self.same_hopf(b)?;
        if let Some(xdeg) = b.cofree_degrees() {
            let (n, da, m) = (self.hopf.dim(), self.dim(), xdeg.len());
            let rho = self.coaction.matrix();
            let mut out = Vec::new();
            for (k, &xk) in xdeg.iter().enumerate() {
                for c in 0..da {
                    if self.carrier.degree(c) != xk {
                        continue;
                    }
                    let mut f = Matrix::zeros(n * m, da);
                    for h in 0..n {
                        for cp in 0..da {
                            let v = rho.get(h * da + c, cp);
                            if !v.is_zero() {
                                f.set(h * m + k, cp, v.clone());
                            }
                        }
                    }
                    out.push(Mor::new(&self.carrier, &b.carrier, f)?);
                }
            }
            return Ok(out);
        }
        colinear_maps(self.hopf.dim(), &self.carrier, self.coaction.matrix(), &b.carrier, b.coaction.matrix())
    }

    /// Colinear maps `self → b` as the columns of a matrix; a map `f` is
    /// stored row-major, entry `f[r, c]` at index `r · dim(self) + c`.
    pub fn hom_space(&self, b: &Self) -> Result<Matrix<K>> {
        let basis = self.hom_basis(b)?;
        let (da, db) = (self.dim(), b.dim());
        Ok(Matrix::from_fn(da * db, basis.len(), |i, j| {
            basis[j].matrix().get(i / da, i % da).clone()
        }))
    }
}

/// Coassociativity and counit residuals of `ρ: V → C ⊗ V`.
pub fn check_coaction<K: Field>(
    c: &CoalgebraData<K>,
    v: &GradedObject<K>,
    rho: &Mor<K>,
) -> Result<CheckReport<K>> {
    let idc = Mor::identity(&c.carrier);
    let idv = Mor::identity(v);
    let mut r = CheckReport::new();
    let lhs = c.delta.tensor(&idv)?.compose(rho)?;
    let rhs = idc.tensor(rho)?.compose(rho)?;
    r.push(Check::morphisms("comodule_coassociativity", &lhs, &rhs));
    r.push(Check::morphisms("comodule_counit", &c.eps.tensor(&idv)?.compose(rho)?, &idv));
    Ok(r)
}

/// Basis of degree-preserving `f: A → B` with `ρ_B f = (id ⊗ f) ρ_A`, where
/// the coactions are into `C ⊗ A` and `C ⊗ B` for a coalgebra of dimension
/// `cdim`.
pub fn colinear_maps<K: Field>(
    cdim: usize,
    a: &GradedObject<K>,
    rho_a: &Matrix<K>,
    b: &GradedObject<K>,
    rho_b: &Matrix<K>,
) -> Result<Vec<Mor<K>>> {
    let (da, db) = (a.dim(), b.dim());
    let mut var_of = vec![usize::MAX; da * db];
    let mut vars = Vec::new();
    for r in 0..db {
        for c in 0..da {
            if b.degree(r) == a.degree(c) {
                var_of[r * da + c] = vars.len();
                vars.push((r, c));
            }
        }
    }
    let mut sys = LinearSystem::new(vars.len());
    let zero = K::zero();
    let mut coeffs: Vec<(usize, K)> = Vec::new();
    for h in 0..cdim {
        for rp in 0..db {
            for c in 0..da {
                // Σ_r ρB[(h,rp), r] f[r,c] − Σ_c' ρA[(h,c'), c] f[rp,c'] = 0
                coeffs.clear();
                for r in 0..db {
                    let v = var_of[r * da + c];
                    let x = rho_b.get(h * db + rp, r);
                    if v != usize::MAX && !x.is_zero() {
                        coeffs.push((v, x.clone()));
                    }
                }
                for cp in 0..da {
                    let v = var_of[rp * da + cp];
                    let x = rho_a.get(h * da + cp, c);
                    if v != usize::MAX && !x.is_zero() {
                        coeffs.push((v, x.neg_ref()));
                    }
                }
                if !coeffs.is_empty() {
                    sys.add_equation(&merge(&mut coeffs), &zero);
                }
            }
        }
    }
    let kernel = sys.homogeneous_basis();
    (0..kernel.cols())
        .map(|j| {
            let mut f = Matrix::zeros(db, da);
            for (k, &(r, c)) in vars.iter().enumerate() {
                f.set(r, c, kernel.get(k, j).clone());
            }
            Mor::new(a, b, f)
        })
        .collect()
}

fn merge<K: Field>(coeffs: &mut [(usize, K)]) -> Vec<(usize, K)> {
    coeffs.sort_by_key(|(v, _)| *v);
    let mut out: Vec<(usize, K)> = Vec::with_capacity(coeffs.len());
    for (v, x) in coeffs.iter() {
        match out.last_mut() {
            Some((w, y)) if w == v => *y = y.add_ref(x),
            _ => out.push((*v, x.clone())),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Checks that `l_{B,X}: B ◁ X → B ⊗ (1 ◁ X)` makes the comodules into a
/// monoidal right module category: normalization `l_{B,1} = id`,
/// `l_{1,X} = id`, the coherence hexagon with identity associators, and
/// colinearity of each `l_{B,X}`.
pub fn check_monoidal_module<K, L>(
    hopf: &Arc<HopfAlgebraData<K>>,
    objects: &[Comodule<K>],
    probes: &[GradedObject<K>],
    l: L,
) -> Result<CheckReport<K>>
where
    K: Field,
    L: Fn(&Comodule<K>, &GradedObject<K>) -> Result<Mor<K>>,
{
    let one = GradedObject::unit(hopf.ctx());
    let unit = Comodule::unit(hopf.clone());
    let mut r = CheckReport::new();
    for (bi, b) in objects.iter().enumerate() {
        let lb1 = l(b, &one)?;
        r.push(Check::equal(
            format!("l_b_unit[{bi}]"),
            lb1.matrix(),
            Mor::identity(&b.carrier).matrix(),
        ));
        for (xi, x) in probes.iter().enumerate() {
            let lbx = l(b, x)?;
            let target = b.tensor(&unit.act(x)?)?;
            let mut c = b.act(x)?.colinearity(&target, &lbx)?;
            c.name = format!("l_colinear[{bi},{xi}]");
            r.push(c);
            for (yi, y) in probes.iter().enumerate() {
                // (l_{B,X} ⊗ id) l_{B◁X,Y} = (id_B ⊗ l_{1◁X,Y}) l_{B,X⊗Y}
                let bx = b.act(x)?;
                let lhs = lbx.tensor(&Mor::identity(y))?.compose(&l(&bx, y)?)?;
                let rhs = Mor::identity(&b.carrier)
                    .tensor(&l(&unit.act(x)?, y)?)?
                    .compose(&l(b, &x.tensor(y)?)?)?;
                r.push(Check::morphisms(format!("l_hexagon[{bi},{xi},{yi}]"), &lhs, &rhs));
            }
        }
    }
    for (xi, x) in probes.iter().enumerate() {
        let l1x = l(&unit, x)?;
        r.push(Check::equal(format!("l_unit_x[{xi}]"), l1x.matrix(), Mor::identity(x).matrix()));
    }
    Ok(r)
}

/// The canonical `l_{B,X} = id_{B⊗X}` of the strict comodule category.
pub fn strict_l<K: Field>(b: &Comodule<K>, x: &GradedObject<K>) -> Result<Mor<K>> {
    Ok(Mor::identity(&b.carrier.tensor(x)?))
}

/// Checks that the trivial-comodule functor `G(V) = (V, u ⊗ id)` is a
/// strict monoidal section of the forgetful functor on the given objects,
/// and that the forgetful functor with `c = ξ = id` satisfies the monoidal
/// module functor axiom.
pub fn check_section<K: Field>(hopf: &Arc<HopfAlgebraData<K>>, objects: &[GradedObject<K>]) -> Result<CheckReport<K>> {
    let mut r = CheckReport::new();
    let one = GradedObject::unit(hopf.ctx());
    let g1 = Comodule::trivial(hopf.clone(), &one)?;
    r.push(Check::equal(
        "section_unit",
        g1.coaction.matrix(),
        Comodule::unit(hopf.clone()).coaction.matrix(),
    ));
    for (i, v) in objects.iter().enumerate() {
        let gv = Comodule::trivial(hopf.clone(), v)?;
        r.extend_prefixed(&format!("trivial[{i}]"), gv.check()?);
        r.push(Check::flag(
            format!("forget_section[{i}]"),
            gv.carrier.same_shape(v) && gv.carrier.labels() == v.labels(),
            "F(G(V)) = V",
        ));
        // 1 ◁ V = G(V), so c_{1,V} = id is the natural iso F G ≅ Id.
        let one_v = g1.act(v)?;
        r.push(Check::equal(format!("unit_action[{i}]"), one_v.coaction.matrix(), gv.coaction.matrix()));
        for (j, w) in objects.iter().enumerate() {
            let gw = Comodule::trivial(hopf.clone(), w)?;
            let gvw = Comodule::trivial(hopf.clone(), &v.tensor(w)?)?;
            let prod = gv.tensor(&gw)?;
            r.push(Check::equal(
                format!("section_monoidal[{i},{j}]"),
                prod.coaction.matrix(),
                gvw.coaction.matrix(),
            ));
            // With c = ξ = id, (c_{1,V} ⊗ c_{1,W}) = c_{1,V⊗W} F(l⁻¹) ξ reduces
            // to the colinearity of the identity G(V)⊗G(W) → G(V⊗W).
            let mut c = prod.colinearity(&gvw, &Mor::identity(&prod.carrier))?;
            c.name = format!("module_functor[{i},{j}]");
            r.push(c);
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::exactalg::Rational;

    fn kz2() -> Arc<HopfAlgebraData<Rational>> {
        Arc::new(builtins::group_algebra(2).unwrap())
    }

    #[test]
    fn regular_comodule_of_group_algebra_is_grouplike() {
        let reg = Comodule::regular(kz2());
        assert!(reg.check().unwrap().passed());
        // ρ(g) = g⊗g
        assert_eq!(reg.coaction.matrix().get(3, 1), &Rational::from(1));
    }

    #[test]
    fn cofree_hom_basis_agrees_with_solved_one() {
        let h = Arc::new(builtins::nichols_cyclic::<crate::Cyclotomic>(3).unwrap());
        let reg = Comodule::regular(h.clone());
        let x = GradedObject::new(h.ctx(), vec![("a".into(), 1), ("b".into(), 2)]).unwrap();
        let cofree = reg.act(&x).unwrap();
        assert_eq!(cofree.cofree_degrees(), Some(vec![1, 2]));
        assert_eq!(Comodule::unit(h.clone()).cofree_degrees(), None);
        for a in [reg.clone(), Comodule::unit(h.clone()), reg.act(&x.left_dual_object()).unwrap(), reg.dual().unwrap()] {
            let fast = a.hom_basis(&cofree).unwrap();
            let solved = colinear_maps(h.dim(), &a.carrier, a.coaction.matrix(), &cofree.carrier, cofree.coaction.matrix())
                .unwrap();
            assert_eq!(fast.len(), solved.len());
            for f in &fast {
                assert!(a.colinearity(&cofree, f).unwrap().passed);
            }
            let span = a.hom_space(&cofree).unwrap();
            assert_eq!(span.rank(), solved.len());
        }
    }

    #[test]
    fn sweedler_regular_coaction() {
        let h = Arc::new(builtins::sweedler::<Rational>().unwrap());
        let reg = Comodule::regular(h);
        assert!(reg.check().unwrap().passed());
        // ρ(x) = x⊗1 + g⊗x
        let m = reg.coaction.matrix();
        assert_eq!(m.get(2 * 4, 2), &Rational::from(1));
        assert_eq!(m.get(4 + 2, 2), &Rational::from(1));
    }

    #[test]
    fn trivial_comodules_pass_for_every_builtin() {
        let hs: Vec<HopfAlgebraData<Rational>> = vec![
            builtins::group_algebra(3).unwrap(),
            builtins::sweedler().unwrap(),
            builtins::exterior_line().unwrap(),
        ];
        for h in hs {
            let h = Arc::new(h);
            let t = Comodule::trivial(h.clone(), h.carrier()).unwrap();
            assert!(t.check().unwrap().passed());
            let tt = t.tensor(&t).unwrap();
            let direct = Comodule::trivial(h.clone(), &h.carrier().tensor(h.carrier()).unwrap()).unwrap();
            assert!(tt.same_as(&direct));
        }
    }

    #[test]
    fn regular_tensor_unit_is_regular() {
        let h = kz2();
        let reg = Comodule::regular(h.clone());
        let r1 = reg.tensor(&Comodule::unit(h)).unwrap();
        assert!(r1.same_as(&reg));
    }

    #[test]
    fn comodule_tensor_is_strictly_associative() {
        let h = kz2();
        let reg = Comodule::regular(h);
        let a = reg.tensor(&reg).unwrap().tensor(&reg).unwrap();
        let b = reg.tensor(&reg.tensor(&reg).unwrap()).unwrap();
        assert_eq!(a.coaction.matrix(), b.coaction.matrix());
        assert!(a.check().unwrap().passed());
    }

    #[test]
    fn dual_comodules() {
        let h = kz2();
        let t = Comodule::trivial(h.clone(), h.carrier()).unwrap();
        let td = t.dual().unwrap();
        assert!(td.same_as(&Comodule::trivial(h.clone(), &h.carrier().left_dual_object()).unwrap()));

        let reg = Comodule::regular(h.clone());
        let d = reg.dual().unwrap();
        assert!(d.check().unwrap().passed());
        // ρ(*g) = S(g)⊗*g = g⊗*g
        assert_eq!(d.coaction.matrix().get(2 + 1, 1), &Rational::from(1));
        assert_eq!(d.coaction.matrix().get(0, 0), &Rational::from(1));

        let ev = left_dual(&reg.carrier).ev;
        let one = Comodule::unit(h);
        let c = reg.tensor(&d).unwrap().colinearity(&one, &ev).unwrap();
        assert!(c.passed);
    }

    #[test]
    fn dual_in_super_vector_spaces_is_a_comodule() {
        let h = Arc::new(builtins::exterior_line::<Rational>().unwrap());
        let reg = Comodule::regular(h.clone());
        let d = reg.dual().unwrap();
        assert!(d.check().unwrap().passed());
        let ev = left_dual(&reg.carrier).ev;
        let c = reg.tensor(&d).unwrap().colinearity(&Comodule::unit(h), &ev).unwrap();
        assert!(c.passed);
    }

    #[test]
    fn act_is_strict() {
        let h = kz2();
        let one = GradedObject::unit(h.ctx());
        let reg = Comodule::regular(h.clone());
        assert!(reg.act(&one).unwrap().same_as(&reg));
        let x = h.carrier().clone();
        let a = reg.act(&x).unwrap().act(&x).unwrap();
        let b = reg.act(&x.tensor(&x).unwrap()).unwrap();
        assert!(a.same_as(&b));
        let t = Comodule::trivial(h.clone(), &x).unwrap().act(&x).unwrap();
        assert!(t.same_as(&Comodule::trivial(h, &x.tensor(&x).unwrap()).unwrap()));
    }

    #[test]
    fn hom_space_dimensions() {
        let h = kz2();
        let reg = Comodule::regular(h.clone());
        let one = Comodule::unit(h.clone());
        assert_eq!(reg.hom_basis(&reg).unwrap().len(), 2);
        assert_eq!(one.hom_basis(&reg).unwrap().len(), 1);
        assert_eq!(one.hom_basis(&one).unwrap().len(), 1);
        let k3 = Arc::new(builtins::group_algebra::<Rational>(3).unwrap());
        let reg3 = Comodule::regular(k3);
        assert_eq!(reg3.hom_space(&reg3).unwrap().cols(), 3);
        for f in reg.hom_basis(&reg).unwrap() {
            assert!(reg.colinearity(&reg, &f).unwrap().passed);
        }
    }

    #[test]
    fn strict_module_structure_passes_and_perturbation_fails() {
        let h = Arc::new(builtins::exterior_line::<Rational>().unwrap());
        let objs = vec![Comodule::regular(h.clone()), Comodule::unit(h.clone())];
        let probes = vec![
            GradedObject::line(h.ctx(), "a", 0),
            GradedObject::line(h.ctx(), "b", 1),
        ];
        let r = check_monoidal_module(&h, &objs, &probes, strict_l).unwrap();
        assert!(r.passed(), "{:?}", r.failures());

        let r = check_monoidal_module(&h, &objs, &probes, |b, x| {
            let l = strict_l(b, x)?;
            Ok(if b.dim() == 2 { l.scale(&Rational::from(2)) } else { l })
        })
        .unwrap();
        assert!(!r.get("l_b_unit[0]").unwrap().passed);
    }

    #[test]
    fn trivial_section_is_monoidal() {
        for h in [
            Arc::new(builtins::sweedler::<Rational>().unwrap()),
            Arc::new(builtins::exterior_line::<Rational>().unwrap()),
        ] {
            let objs = vec![GradedObject::unit(h.ctx()), h.carrier().clone()];
            let r = check_section(&h, &objs).unwrap();
            assert!(r.passed(), "{:?}", r.failures());
        }
    }
}
