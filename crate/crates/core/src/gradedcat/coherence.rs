use super::{GradedMorphism as Mor, GradedObject};
use crate::error::Result;
use crate::exactalg::Field;
use crate::report::{Check, CheckReport};

/// Hexagons, braid relation and invertibility of the braiding on every
/// ordered triple (pair) drawn from `objects`.
///
/// With identity associators the hexagons read
/// `σ_{X,Y⊗Z} = (id_Y ⊗ σ_{X,Z})(σ_{X,Y} ⊗ id_Z)` and
/// `σ_{X⊗Y,Z} = (σ_{X,Z} ⊗ id_Y)(id_X ⊗ σ_{Y,Z})`.
pub fn check_braiding_axioms<K: Field>(objects: &[GradedObject<K>]) -> Result<CheckReport<K>> {
    let mut r = CheckReport::new();
    for (i, x) in objects.iter().enumerate() {
        let ix = Mor::identity(x);
        for (j, y) in objects.iter().enumerate() {
            let iy = Mor::identity(y);
            let cxy = Mor::braiding(x, y)?;
            r.push(Check::morphisms(
                format!("braiding_inverse[{i},{j}]"),
                &Mor::braiding_inv(x, y)?.compose(&cxy)?,
                &Mor::identity(cxy.source()),
            ));
            for (k, z) in objects.iter().enumerate() {
                let iz = Mor::identity(z);
                let lhs = Mor::braiding(x, &y.tensor(z)?)?;
                let rhs = iy.tensor(&Mor::braiding(x, z)?)?.compose(&cxy.tensor(&iz)?)?;
                r.push(Check::morphisms(format!("hexagon_left[{i},{j},{k}]"), &lhs, &rhs));

                let lhs = Mor::braiding(&x.tensor(y)?, z)?;
                let rhs = Mor::braiding(x, z)?
                    .tensor(&iy)?
                    .compose(&ix.tensor(&Mor::braiding(y, z)?)?)?;
                r.push(Check::morphisms(format!("hexagon_right[{i},{j},{k}]"), &lhs, &rhs));

                let cyz = Mor::braiding(y, z)?;
                let lhs = Mor::compose_all(&[
                    &cyz.tensor(&ix)?,
                    &iy.tensor(&Mor::braiding(x, z)?)?,
                    &cxy.tensor(&iz)?,
                ])?;
                let rhs = Mor::compose_all(&[
                    &iz.tensor(&cxy)?,
                    &Mor::braiding(x, z)?.tensor(&iy)?,
                    &ix.tensor(&cyz)?,
                ])?;
                r.push(Check::morphisms(format!("braid_relation[{i},{j},{k}]"), &lhs, &rhs));
            }
        }
    }
    Ok(r)
}
