use std::sync::Arc;

use super::structures::HopfAlgebraData;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::gradedcat::{GradedMorphism as Mor, GradedObject};
use crate::report::{Check, CheckReport};

/// Yetter-Drinfeld module: an `H`-module and `H`-comodule on the same object.
#[derive(Clone, Debug)]
pub struct YDModuleData<K: Field> {
    pub hopf: Arc<HopfAlgebraData<K>>,
    pub carrier: GradedObject<K>,
    /// `H ⊗ V → V`
    pub action: Mor<K>,
    /// `V → H ⊗ V`
    pub coaction: Mor<K>,
}

impl<K: Field> YDModuleData<K> {
    pub fn new(
        hopf: Arc<HopfAlgebraData<K>>,
        carrier: GradedObject<K>,
        action: Mor<K>,
        coaction: Mor<K>,
    ) -> Result<Self> {
        let hv = hopf.carrier().tensor(&carrier)?;
        if !action.source().same_shape(&hv) || !action.target().same_shape(&carrier) {
            return Err(Error::ShapeMismatch("action must be H⊗V → V".into()));
        }
        if !coaction.source().same_shape(&carrier) || !coaction.target().same_shape(&hv) {
            return Err(Error::ShapeMismatch("coaction must be V → H⊗V".into()));
        }
        Ok(YDModuleData {
            hopf,
            carrier,
            action,
            coaction,
        })
    }

    /// Action `ε ⊗ id` and coaction `u ⊗ id`.
    pub fn trivial(hopf: Arc<HopfAlgebraData<K>>, carrier: GradedObject<K>) -> Result<Self> {
        let id = Mor::identity(&carrier);
        let action = hopf.eps().tensor(&id)?;
        let coaction = hopf.u().tensor(&id)?;
        Self::new(hopf, carrier, action, coaction)
    }

    /// Module, comodule and Yetter-Drinfeld compatibility residuals.
    ///
    /// The compatibility reads
    /// `(m ⊗ μ)(id ⊗ σ_{H,H} ⊗ id)(Δ ⊗ δ)
    ///  = (m ⊗ id)(id ⊗ σ_{V,H})(δ ⊗ id)(μ ⊗ id)(id ⊗ σ_{H,V})(Δ ⊗ id)`.
    pub fn check(&self) -> Result<CheckReport<K>> {
        let h = self.hopf.carrier();
        let v = &self.carrier;
        let idh = Mor::identity(h);
        let idv = Mor::identity(v);
        let (mu, delta_v) = (&self.action, &self.coaction);
        let (m, u, d, e) = (self.hopf.m(), self.hopf.u(), self.hopf.delta(), self.hopf.eps());
        let mut r = CheckReport::new();

        let lhs = mu.compose(&m.tensor(&idv)?)?;
        let rhs = mu.compose(&idh.tensor(mu)?)?;
        r.push(Check::morphisms("module_associativity", &lhs, &rhs));
        r.push(Check::morphisms("module_unit", &mu.compose(&u.tensor(&idv)?)?, &idv));

        let lhs = d.tensor(&idv)?.compose(delta_v)?;
        let rhs = idh.tensor(delta_v)?.compose(delta_v)?;
        r.push(Check::morphisms("comodule_coassociativity", &lhs, &rhs));
        r.push(Check::morphisms("comodule_counit", &e.tensor(&idv)?.compose(delta_v)?, &idv));

        let lhs = m
            .tensor(mu)?
            .compose(&d.tensor(delta_v)?.then_braid_middle(h, h, h, v)?)?;
        let rhs = Mor::compose_all(&[
            &m.tensor(&idv)?,
            &idh.tensor(&Mor::braiding(v, h)?)?,
            &delta_v.tensor(&idh)?,
            &mu.tensor(&idh)?,
            &idh.tensor(&Mor::braiding(h, v)?)?,
            &d.tensor(&idv)?,
        ])?;
        r.push(Check::morphisms("yetter_drinfeld_compatibility", &lhs, &rhs));
        Ok(r)
    }

    fn same_hopf(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.hopf, &other.hopf) || self.hopf.same_structure(&other.hopf) {
            Ok(())
        } else {
            Err(Error::InvalidStructure("YD modules over different Hopf algebras".into()))
        }
    }
}

/// `c_{V,W} = (μ_W ⊗ id_V)(id_H ⊗ σ_{V,W})(δ_V ⊗ id_W): V ⊗ W → W ⊗ V`.
pub fn yd_braiding<K: Field>(v: &YDModuleData<K>, w: &YDModuleData<K>) -> Result<Mor<K>> {
    v.same_hopf(w)?;
    let idh = Mor::identity(v.hopf.carrier());
    let idv = Mor::identity(&v.carrier);
    let idw = Mor::identity(&w.carrier);
    Mor::compose_all(&[
        &w.action.tensor(&idv)?,
        &idh.tensor(&Mor::braiding(&v.carrier, &w.carrier)?)?,
        &v.coaction.tensor(&idw)?,
    ])
}

/// `c_{V,W}^{-1} = σ_{V,W}^{-1} (μ_W ⊗ id)(σ_{H,W}^{-1} ⊗ id)(id ⊗ S^{-1} ⊗ id)(id_W ⊗ δ_V)`.
pub fn yd_braiding_inverse<K: Field>(v: &YDModuleData<K>, w: &YDModuleData<K>) -> Result<Mor<K>> {
    v.same_hopf(w)?;
    let h = v.hopf.carrier();
    let s_inv = v.hopf.antipode_inverse()?;
    let idv = Mor::identity(&v.carrier);
    let idw = Mor::identity(&w.carrier);
    Mor::compose_all(&[
        &Mor::braiding_inv(&v.carrier, &w.carrier)?,
        &w.action.tensor(&idv)?,
        &Mor::braiding_inv(h, &w.carrier)?.tensor(&idv)?,
        &Mor::tensor_all(&[&idw, &s_inv, &idv])?,
        &idw.tensor(&v.coaction)?,
    ])
}
