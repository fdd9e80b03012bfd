use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::gradedcat::{Context, GradedMorphism as Mor, GradedObject};
use crate::report::{Check, CheckReport};

fn expect_map<K: Field>(
    what: &str,
    f: &Mor<K>,
    source: &GradedObject<K>,
    target: &GradedObject<K>,
) -> Result<()> {
    if !f.source().same_shape(source) || !f.target().same_shape(target) {
        return Err(Error::ShapeMismatch(format!(
            "{what} has shape {}x{}, expected {}x{}",
            f.target().dim(),
            f.source().dim(),
            target.dim(),
            source.dim()
        )));
    }
    Ok(())
}

/// Algebra `(H, m, u)` in the braided category.
#[derive(Clone, Debug)]
pub struct AlgebraData<K: Field> {
    pub carrier: GradedObject<K>,
    pub m: Mor<K>,
    pub u: Mor<K>,
}

impl<K: Field> AlgebraData<K> {
    pub fn new(carrier: GradedObject<K>, m: Mor<K>, u: Mor<K>) -> Result<Self> {
        let hh = carrier.tensor(&carrier)?;
        expect_map("multiplication", &m, &hh, &carrier)?;
        expect_map("unit", &u, &GradedObject::unit(carrier.ctx()), &carrier)?;
        Ok(AlgebraData { carrier, m, u })
    }

    pub fn check(&self) -> Result<CheckReport<K>> {
        let id = Mor::identity(&self.carrier);
        let mut r = CheckReport::new();
        let lhs = self.m.compose(&self.m.tensor(&id)?)?;
        let rhs = self.m.compose(&id.tensor(&self.m)?)?;
        r.push(Check::morphisms("associativity", &lhs, &rhs));
        let left = self.m.compose(&self.u.tensor(&id)?)?;
        r.push(Check::morphisms("left_unit", &left, &id));
        let right = self.m.compose(&id.tensor(&self.u)?)?;
        r.push(Check::morphisms("right_unit", &right, &id));
        Ok(r)
    }
}

/// Coalgebra `(H, Δ, ε)` in the braided category.
#[derive(Clone, Debug)]
pub struct CoalgebraData<K: Field> {
    pub carrier: GradedObject<K>,
    pub delta: Mor<K>,
    pub eps: Mor<K>,
}

impl<K: Field> CoalgebraData<K> {
    pub fn new(carrier: GradedObject<K>, delta: Mor<K>, eps: Mor<K>) -> Result<Self> {
        let hh = carrier.tensor(&carrier)?;
        expect_map("comultiplication", &delta, &carrier, &hh)?;
        expect_map("counit", &eps, &carrier, &GradedObject::unit(carrier.ctx()))?;
        Ok(CoalgebraData {
            carrier,
            delta,
            eps,
        })
    }

    pub fn check(&self) -> Result<CheckReport<K>> {
        let id = Mor::identity(&self.carrier);
        let mut r = CheckReport::new();
        let lhs = self.delta.tensor(&id)?.compose(&self.delta)?;
        let rhs = id.tensor(&self.delta)?.compose(&self.delta)?;
        r.push(Check::morphisms("coassociativity", &lhs, &rhs));
        let left = self.eps.tensor(&id)?.compose(&self.delta)?;
        r.push(Check::morphisms("left_counit", &left, &id));
        let right = id.tensor(&self.eps)?.compose(&self.delta)?;
        r.push(Check::morphisms("right_counit", &right, &id));
        Ok(r)
    }

    pub fn ctx(&self) -> &Context<K> {
        self.carrier.ctx()
    }
}

/// Bialgebra: an algebra and a coalgebra on the same carrier.
#[derive(Clone, Debug)]
pub struct BialgebraData<K: Field> {
    pub algebra: AlgebraData<K>,
    pub coalgebra: CoalgebraData<K>,
}

impl<K: Field> BialgebraData<K> {
    pub fn new(algebra: AlgebraData<K>, coalgebra: CoalgebraData<K>) -> Result<Self> {
        if !algebra.carrier.same_shape(&coalgebra.carrier) {
            return Err(Error::ShapeMismatch("algebra and coalgebra carriers differ".into()));
        }
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn from_maps(carrier: GradedObject<K>, m: Mor<K>, u: Mor<K>, delta: Mor<K>, eps: Mor<K>) -> Result<Self> {
        Self::new(
            AlgebraData::new(carrier.clone(), m, u)?,
            CoalgebraData::new(carrier, delta, eps)?,
        )
    }

    pub fn carrier(&self) -> &GradedObject<K> {
        &self.algebra.carrier
    }

    pub fn ctx(&self) -> &Context<K> {
        self.carrier().ctx()
    }

    pub fn dim(&self) -> usize {
        self.carrier().dim()
    }

    pub fn m(&self) -> &Mor<K> {
        &self.algebra.m
    }

    pub fn u(&self) -> &Mor<K> {
        &self.algebra.u
    }

    pub fn delta(&self) -> &Mor<K> {
        &self.coalgebra.delta
    }

    pub fn eps(&self) -> &Mor<K> {
        &self.coalgebra.eps
    }

    /// `u ∘ ε`, the unit of the convolution algebra.
    pub fn unit_counit(&self) -> Result<Mor<K>> {
        self.u().compose(self.eps())
    }

    /// Checks only the compatibility axioms between product and coproduct.
    pub fn check_compatibility(&self) -> Result<CheckReport<K>> {
        let h = self.carrier();
        let mut r = CheckReport::new();
        let lhs = self.delta().compose(self.m())?;
        let rhs = self
            .m()
            .tensor(self.m())?
            .compose(&self.delta().tensor(self.delta())?.then_braid_middle(h, h, h, h)?)?;
        r.push(Check::morphisms("coproduct_multiplicative", &lhs, &rhs));
        let lhs = self.delta().compose(self.u())?;
        let rhs = self.u().tensor(self.u())?;
        r.push(Check::morphisms("coproduct_unital", &lhs, &rhs));
        let lhs = self.eps().compose(self.m())?;
        let rhs = self.eps().tensor(self.eps())?;
        r.push(Check::morphisms("counit_multiplicative", &lhs, &rhs));
        let lhs = self.eps().compose(self.u())?;
        r.push(Check::morphisms("counit_unital", &lhs, &Mor::identity(lhs.source())));
        Ok(r)
    }

    /// Algebra, coalgebra and compatibility axioms.
    pub fn check(&self) -> Result<CheckReport<K>> {
        let mut r = CheckReport::new();
        r.extend(self.algebra.check()?);
        r.extend(self.coalgebra.check()?);
        r.extend(self.check_compatibility()?);
        Ok(r)
    }

    /// Convolution product `f ∗ g = m (f ⊗ g) Δ`.
    pub fn convolution(&self, f: &Mor<K>, g: &Mor<K>) -> Result<Mor<K>> {
        let h = self.carrier();
        expect_map("convolution factor", f, h, h)?;
        expect_map("convolution factor", g, h, h)?;
        Mor::compose_all(&[self.m(), &f.tensor(g)?, self.delta()])
    }
}

/// Hopf algebra: a bialgebra with antipode.
#[derive(Clone, Debug)]
pub struct HopfAlgebraData<K: Field> {
    pub bialgebra: BialgebraData<K>,
    pub antipode: Mor<K>,
}

impl<K: Field> HopfAlgebraData<K> {
    pub fn new(bialgebra: BialgebraData<K>, antipode: Mor<K>) -> Result<Self> {
        let h = bialgebra.carrier();
        expect_map("antipode", &antipode, h, h)?;
        Ok(HopfAlgebraData {
            bialgebra,
            antipode,
        })
    }

    /// Solves for the antipode.
    pub fn from_bialgebra(bialgebra: BialgebraData<K>) -> Result<Self> {
        let s = super::antipode::solve_antipode(&bialgebra)?;
        Ok(HopfAlgebraData {
            bialgebra,
            antipode: s,
        })
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn carrier(&self) -> &GradedObject<K> {
        self.bialgebra.carrier()
    }

    pub fn ctx(&self) -> &Context<K> {
        self.bialgebra.ctx()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn m(&self) -> &Mor<K> {
        self.bialgebra.m()
    }

    pub fn u(&self) -> &Mor<K> {
        self.bialgebra.u()
    }

    pub fn delta(&self) -> &Mor<K> {
        self.bialgebra.delta()
    }

    pub fn eps(&self) -> &Mor<K> {
        self.bialgebra.eps()
    }

    pub fn s(&self) -> &Mor<K> {
        &self.antipode
    }

    pub fn coalgebra(&self) -> &CoalgebraData<K> {
        &self.bialgebra.coalgebra
    }

    pub fn algebra(&self) -> &AlgebraData<K> {
        &self.bialgebra.algebra
    }

    pub fn check_antipode(&self) -> Result<CheckReport<K>> {
        let b = &self.bialgebra;
        let id = Mor::identity(self.carrier());
        let ue = b.unit_counit()?;
        let mut r = CheckReport::new();
        r.push(Check::morphisms("antipode_left", &b.convolution(&self.antipode, &id)?, &ue));
        r.push(Check::morphisms("antipode_right", &b.convolution(&id, &self.antipode)?, &ue));
        Ok(r)
    }

    /// Full axiom suite.
    pub fn check(&self) -> Result<CheckReport<K>> {
        let mut r = self.bialgebra.check()?;
        r.extend(self.check_antipode()?);
        Ok(r)
    }

    pub fn antipode_inverse(&self) -> Result<Mor<K>> {
        self.antipode.inverse().map_err(|_| Error::SingularAntipode)
    }

    /// Whether all five structure maps agree entrywise with `other`.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.m().matrix() == other.m().matrix()
            && self.u().matrix() == other.u().matrix()
            && self.delta().matrix() == other.delta().matrix()
            && self.eps().matrix() == other.eps().matrix()
            && self.s().matrix() == other.s().matrix()
    }
}
