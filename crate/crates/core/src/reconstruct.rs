//! Hopf algebra structure on the relative coend, extracted by solving the
//! universal diagrams as linear systems, and its comparison with the
//! original Hopf algebra.

use std::sync::Arc;

use crate::braidedhopf::{solve_antipode, BialgebraData, HopfAlgebraData};
use crate::coend::{compute_relative_coend, CoendResult, Diagram, REGULAR, UNIT};
use crate::comodcat::{check_coaction, colinear_maps, Comodule};
use crate::error::{Error, Result};
use crate::exactalg::{solve_unknown_map, Field, Matrix};
use crate::gradedcat::{left_dual, psi, GradedMorphism as Mor, GradedObject};
use crate::report::{Check, CheckReport};

/// `ε: C → 1` with `ε π_B = ev_{F(B)}` on every diagram block.
pub fn reconstruct_counit<K: Field>(c: &CoendResult<K>) -> Result<Mor<K>> {
    let q = c.dim();
    let constraints: Vec<_> = c
        .diagram
        .objects
        .iter()
        .zip(&c.pis)
        .map(|(o, pi)| (Matrix::identity(1), pi.matrix().clone(), left_dual(&o.carrier).ev.into_matrix()))
        .collect();
    let eps = solve_unknown_map(&constraints, (1, q))?;
    Mor::new(&c.carrier, &GradedObject::unit(c.carrier.ctx()), eps)
}

/// `(π_B ⊗ π_B)(id ⊗ coev_{F(B)} ⊗ id)`: column `(i, j)` is
/// `Σ_k π_B(b_i ⊗ *b_k) ⊗ π_B(b_k ⊗ *b_j)`.
fn coproduct_target<K: Field>(pi: &Matrix<K>, d: usize) -> Matrix<K> {
    let q = pi.rows();
    let mut out = Matrix::<K>::zeros(q * q, d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (l, r) = (i * d + k, k * d + j);
                for z in 0..q {
                    let a = pi.get(z, l);
                    if a.is_zero() {
                        continue;
                    }
                    for w in 0..q {
                        let b = pi.get(w, r);
                        if !b.is_zero() {
                            out.entry_mut(z * q + w, i * d + j).add_mul_assign(a, b);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `Δ: C → C ⊗ C` with `Δ π_B = (π_B ⊗ π_B)(id ⊗ coev ⊗ id)` on every block.
pub fn reconstruct_coproduct<K: Field>(c: &CoendResult<K>) -> Result<Mor<K>> {
    let q = c.dim();
    let constraints: Vec<_> = c
        .diagram
        .objects
        .iter()
        .zip(&c.pis)
        .map(|(o, pi)| (Matrix::identity(q * q), pi.matrix().clone(), coproduct_target(pi.matrix(), o.dim())))
        .collect();
    let delta = solve_unknown_map(&constraints, (q * q, q))?;
    Mor::new(&c.carrier, &c.carrier.tensor(&c.carrier)?, delta)
}

/// `ρ_B = ψ(π_B): F(B) → C ⊗ F(B)` for a comodule reachable from the diagram.
pub fn comodule_structure_rho<K: Field>(c: &CoendResult<K>, b: &Comodule<K>) -> Result<Mor<K>> {
    let pi = c.pi_for(b)?;
    psi(&pi, &b.carrier, &b.carrier)
}

/// Unit `u = π_1` and the product `m` determined by
/// `m(π_A(a_i ⊗ *a_k) ⊗ π_B(b_j ⊗ *b_l)) χ(|a_k|, |b_j| − |b_l|)
///  = π_{A⊗B}((a_i ⊗ b_j) ⊗ *(a_k ⊗ b_l))`,
/// which is the coordinate form of the product diagram with `ξ = id`.
/// Constrained on all pairs of the regular and unit comodules.
pub fn reconstruct_product<K: Field>(c: &CoendResult<K>) -> Result<(Mor<K>, Mor<K>)> {
    let q = c.dim();
    let ctx = c.carrier.ctx();
    let one = GradedObject::unit(ctx);
    let u = c.pi_unit().retype(&one, &c.carrier)?;
    let base = [REGULAR, UNIT];
    let mut constraints = Vec::new();
    for &a in &base {
        for &b in &base {
            let (ca, cb) = (&c.diagram.objects[a], &c.diagram.objects[b]);
            let (pa, pb) = (c.pis[a].matrix(), c.pis[b].matrix());
            let pab = c.pi_for(&ca.tensor(cb)?)?;
            let (da, db) = (ca.dim(), cb.dim());
            let n = da * db;
            let mut t = Matrix::zeros(q * q, n * n);
            let mut r = Matrix::zeros(q, n * n);
            for i in 0..da {
                for k in 0..da {
                    for j in 0..db {
                        for l in 0..db {
                            let col = (i * db + j) * n + (k * db + l);
                            let deg = ctx.group().sub(cb.carrier.degree(j), cb.carrier.degree(l));
                            let chi = ctx.chi(ca.carrier.degree(k), deg);
                            for z in 0..q {
                                let x = pa.get(z, i * da + k);
                                if x.is_zero() {
                                    continue;
                                }
                                let x = x.mul_ref(chi);
                                for w in 0..q {
                                    let y = pb.get(w, j * db + l);
                                    if !y.is_zero() {
                                        t.set(z * q + w, col, x.mul_ref(y));
                                    }
                                }
                            }
                            for z in 0..q {
                                r.set(z, col, pab.matrix().get(z, col).clone());
                            }
                        }
                    }
                }
            }
            constraints.push((Matrix::identity(q), t, r));
        }
    }
    let m = solve_unknown_map(&constraints, (q, q * q))?;
    Ok((Mor::new(&c.carrier.tensor(&c.carrier)?, &c.carrier, m)?, u))
}

/// Antipode from the diagram `S π_B = (ev ⊗ id) ν_B`, which in coordinates
/// reads `S π_B(b_i ⊗ *b_j) = χ(−|b_i|, |b_i| − |b_j|)⁻¹ π_{*B}(*b_j ⊗ **b_i)`.
/// Constrained on the regular and unit comodules.
pub fn reconstruct_antipode_from_diagram<K: Field>(c: &CoendResult<K>) -> Result<Mor<K>> {
    let q = c.dim();
    let ctx = c.carrier.ctx();
    let g = ctx.group();
    let mut constraints = Vec::new();
    for &b in &[REGULAR, UNIT] {
        let cb = &c.diagram.objects[b];
        let pd = c.pi_for(&cb.dual()?)?;
        let d = cb.dim();
        let mut r = Matrix::zeros(q, d * d);
        for i in 0..d {
            for j in 0..d {
                let di = cb.carrier.degree(i);
                let dj = cb.carrier.degree(j);
                let factor = ctx.chi_inv(g.neg(di), g.sub(di, dj));
                for z in 0..q {
                    let x = pd.matrix().get(z, j * d + i);
                    if !x.is_zero() {
                        r.set(z, i * d + j, x.mul_ref(factor));
                    }
                }
            }
        }
        constraints.push((Matrix::identity(q), c.pis[b].matrix().clone(), r));
    }
    let s = solve_unknown_map(&constraints, (q, q))?;
    Mor::new(&c.carrier, &c.carrier, s)
}

/// Both antipode routes; they must agree.
pub fn reconstruct_antipode<K: Field>(c: &CoendResult<K>, b: &BialgebraData<K>) -> Result<Mor<K>> {
    let from_diagram = reconstruct_antipode_from_diagram(c)?;
    let convolution = solve_antipode(b)?;
    if from_diagram.matrix() != convolution.matrix() {
        return Err(Error::CrossCheckMismatch(
            "antipode from the diagram differs from the convolution inverse".into(),
        ));
    }
    Ok(from_diagram)
}

/// The Hopf algebra `H(F)` on the coend.
#[derive(Clone, Debug)]
pub struct ReconstructedHopf<K: Field> {
    pub coend: CoendResult<K>,
    pub hopf: HopfAlgebraData<K>,
}

impl<K: Field> ReconstructedHopf<K> {
    pub fn delta(&self) -> &Mor<K> {
        self.hopf.delta()
    }

    pub fn eps(&self) -> &Mor<K> {
        self.hopf.eps()
    }

    pub fn m(&self) -> &Mor<K> {
        self.hopf.m()
    }

    pub fn u(&self) -> &Mor<K> {
        self.hopf.u()
    }

    pub fn s(&self) -> &Mor<K> {
        self.hopf.s()
    }
}

/// Counit, coproduct, unit, product and antipode on the coend.
pub fn reconstruct<K: Field>(c: &CoendResult<K>) -> Result<ReconstructedHopf<K>> {
    let eps = reconstruct_counit(c)?;
    let delta = reconstruct_coproduct(c)?;
    let (m, u) = reconstruct_product(c)?;
    let b = BialgebraData::from_maps(c.carrier.clone(), m, u, delta, eps)?;
    let s = reconstruct_antipode(c, &b)?;
    Ok(ReconstructedHopf {
        coend: c.clone(),
        hopf: HopfAlgebraData::new(b, s)?,
    })
}

/// `h: H → C` and its inverse.
#[derive(Clone, Debug)]
pub struct ComparisonIso<K: Field> {
    pub map: Mor<K>,
    pub inverse: Mor<K>,
}

/// `h(h_i) = Σ_j ε(h_j) π_H(h_i ⊗ *h_j)`, with checks that it intertwines
/// `Δ`, `ε`, `m`, `u` and `S`.
pub fn canonical_comparison<K: Field>(
    rec: &ReconstructedHopf<K>,
) -> Result<(ComparisonIso<K>, CheckReport<K>)> {
    let c = &rec.coend;
    let h = c.hopf();
    let n = h.dim();
    let pi = c.pi_regular().matrix();
    let eps = h.eps().matrix();
    let mut map = Matrix::<K>::zeros(c.dim(), n);
    for i in 0..n {
        for j in 0..n {
            let e = eps.get(0, j);
            if e.is_zero() {
                continue;
            }
            for z in 0..c.dim() {
                let x = pi.get(z, i * n + j);
                if !x.is_zero() {
                    map.entry_mut(z, i).add_mul_assign(x, e);
                }
            }
        }
    }
    let map = Mor::new(h.carrier(), &c.carrier, map)?;
    let inverse = map
        .inverse()
        .map_err(|_| Error::NotIso(format!("comparison map H → C has shape {}x{}", c.dim(), n)))?;
    let hh = map.tensor(&map)?;
    let mut r = CheckReport::new();
    r.push(Check::morphisms("iso", &inverse.compose(&map)?, &Mor::identity(h.carrier())));
    r.push(Check::morphisms(
        "intertwines_coproduct",
        &rec.delta().compose(&map)?,
        &hh.compose(h.delta())?,
    ));
    r.push(Check::morphisms("intertwines_counit", &rec.eps().compose(&map)?, h.eps()));
    r.push(Check::morphisms(
        "intertwines_product",
        &map.compose(h.m())?,
        &rec.m().compose(&hh)?,
    ));
    r.push(Check::morphisms("intertwines_unit", &map.compose(h.u())?, rec.u()));
    r.push(Check::morphisms(
        "intertwines_antipode",
        &map.compose(h.s())?,
        &rec.s().compose(&map)?,
    ));
    Ok((ComparisonIso { map, inverse }, r))
}

/// For each pair, `dim Hom_H(A, B) = dim Hom_C(F̂A, F̂B)` where `F̂A` carries
/// `ρ_A = ψ(π_A)`; each `ρ_A` is also checked to be a `C`-comodule.
pub fn verify_equivalence_samples<K: Field>(
    rec: &ReconstructedHopf<K>,
    pairs: &[(&str, Comodule<K>, Comodule<K>)],
) -> Result<CheckReport<K>> {
    let c = &rec.coend;
    let coalg = rec.hopf.coalgebra();
    let mut r = CheckReport::new();
    for (name, a, b) in pairs {
        let ra = comodule_structure_rho(c, a)?;
        let rb = comodule_structure_rho(c, b)?;
        r.extend_prefixed(&format!("{name}.source"), check_coaction(coalg, &a.carrier, &ra)?);
        r.extend_prefixed(&format!("{name}.target"), check_coaction(coalg, &b.carrier, &rb)?);
        let original = a.hom_basis(b)?.len();
        let transported = colinear_maps(c.dim(), &a.carrier, ra.matrix(), &b.carrier, rb.matrix())?.len();
        r.push(Check::flag(
            format!("{name}.hom_dim"),
            original == transported,
            format!("{original} vs {transported}"),
        ));
    }
    Ok(r)
}

/// The maps `c_{B,X} = id: F̂(B ◁ X) → F̂(B) ◁ X` are `C`-colinear:
/// `ρ_{B◁X} = ρ_B ⊗ id_X`.
pub fn check_c_maps<K: Field>(
    c: &CoendResult<K>,
    objects: &[usize],
    probes: &[GradedObject<K>],
) -> Result<CheckReport<K>> {
    let mut r = CheckReport::new();
    for &b in objects {
        let cb = &c.diagram.objects[b];
        let rb = comodule_structure_rho(c, cb)?;
        for (xi, x) in probes.iter().enumerate() {
            let bx = cb.act(x)?;
            let lhs = comodule_structure_rho(c, &bx)?;
            let rhs = rb.tensor(&Mor::identity(x))?;
            r.push(Check::equal(
                format!("c_map_colinear[{},{xi}]", c.diagram.names[b]),
                lhs.matrix(),
                rhs.matrix(),
            ));
        }
    }
    Ok(r)
}

/// Summary of a full reconstruction run.
#[derive(Clone, Debug)]
pub struct Verification<K: Field> {
    pub original_dim: usize,
    pub coend_dim: usize,
    pub ambient_dim: usize,
    pub relation_count: usize,
    pub reconstructed: ReconstructedHopf<K>,
    pub comparison: ComparisonIso<K>,
    pub report: CheckReport<K>,
}

/// The standard sample pairs: (regular, regular), (unit, regular),
/// (unit, unit).
pub fn standard_pairs<K: Field>(h: &Arc<HopfAlgebraData<K>>) -> Vec<(&'static str, Comodule<K>, Comodule<K>)> {
    let reg = Comodule::regular(h.clone());
    let one = Comodule::unit(h.clone());
    vec![
        ("regular_regular", reg.clone(), reg.clone()),
        ("unit_regular", one.clone(), reg),
        ("unit_unit", one.clone(), one),
    ]
}

/// Coend, reconstruction, comparison, equivalence samples and c-maps.
pub fn verify_reconstruction<K: Field>(d: &Diagram<K>) -> Result<Verification<K>> {
    let c = compute_relative_coend(d)?;
    let h = c.hopf().clone();
    let mut report = CheckReport::new();
    report.extend_prefixed("coend", c.residual_report.clone());
    report.push(Check::flag(
        "coend.dim_equals_dim_h",
        c.dim() == h.dim(),
        format!("{} vs {}", c.dim(), h.dim()),
    ));
    let rec = reconstruct(&c)?;
    report.extend_prefixed("reconstructed", rec.hopf.check()?);
    report.push(Check::flag("reconstructed.antipode_routes_agree", true, "diagram and convolution"));
    let (comparison, iso) = canonical_comparison(&rec)?;
    report.extend_prefixed("comparison", iso);
    let rho_reg = comodule_structure_rho(&c, &c.diagram.objects[REGULAR])?;
    // ρ_H = (h ⊗ id) Δ
    let lhs = comparison.map.tensor(&Mor::identity(h.carrier()))?.compose(h.delta())?;
    report.push(Check::morphisms("comparison.regular_coaction", &lhs, &rho_reg));
    report.extend_prefixed("equivalence", verify_equivalence_samples(&rec, &standard_pairs(&h))?);
    report.extend_prefixed("module", check_c_maps(&c, &[REGULAR, UNIT], &d.probes)?);
    Ok(Verification {
        original_dim: h.dim(),
        coend_dim: c.dim(),
        ambient_dim: c.quotient.ambient_dim,
        relation_count: c.dinaturality_count + c.balancing_count,
        reconstructed: rec,
        comparison,
        report,
    })
}
