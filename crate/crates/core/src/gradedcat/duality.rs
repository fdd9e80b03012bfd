use super::morphism::GradedMorphism;
use super::object::GradedObject;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};

/// A dual object together with its evaluation and coevaluation.
#[derive(Clone, Debug)]
pub struct Dual<K: Field> {
    pub object: GradedObject<K>,
    pub ev: GradedMorphism<K>,
    pub coev: GradedMorphism<K>,
}

fn pairing<K: Field>(n: usize) -> Matrix<K> {
    // Row vector with ones at the diagonal positions i * n + i.
    Matrix::from_fn(1, n * n, |_, c| if c / n == c % n { K::one() } else { K::zero() })
}

/// Left dual `*V` with `ev_V: V⊗*V → 1`, `v_i⊗*v_j ↦ δ_ij`, and
/// `coev_V: 1 → *V⊗V`, `1 ↦ Σ *v_i⊗v_i`.
pub fn left_dual<K: Field>(v: &GradedObject<K>) -> Dual<K> {
    let dual = v.left_dual_object();
    let unit = GradedObject::unit(v.ctx());
    let n = v.dim();
    let ev = GradedMorphism::new_unchecked(&v.tensor(&dual).expect("same context"), &unit, pairing(n));
    let coev = GradedMorphism::new_unchecked(
        &unit,
        &dual.tensor(v).expect("same context"),
        pairing(n).transpose(),
    );
    Dual { object: dual, ev, coev }
}

/// Right dual `V*` with `ev_V: V*⊗V → 1` and `coev_V: 1 → V⊗V*`.
pub fn right_dual<K: Field>(v: &GradedObject<K>) -> Dual<K> {
    let dual = v.right_dual_object();
    let unit = GradedObject::unit(v.ctx());
    let n = v.dim();
    let ev = GradedMorphism::new_unchecked(&dual.tensor(v).expect("same context"), &unit, pairing(n));
    let coev = GradedMorphism::new_unchecked(
        &unit,
        &v.tensor(&dual).expect("same context"),
        pairing(n).transpose(),
    );
    Dual { object: dual, ev, coev }
}

/// `φ^l_{X,Y}: *Y⊗*X → *(X⊗Y)`, `*y_j⊗*x_i ↦ *(x_i⊗y_j)`.
///
/// With the plain dual-basis convention this is a permutation; it is the
/// map for which `ev_{*X} = *(coev_X) ∘ φ^l_{*X,X}` holds on the nose.
pub fn phi_left<K: Field>(x: &GradedObject<K>, y: &GradedObject<K>) -> Result<GradedMorphism<K>> {
    x.ctx().same(y.ctx())?;
    let source = y.left_dual_object().tensor(&x.left_dual_object())?;
    let target = x.tensor(y)?.left_dual_object();
    let (dx, dy) = (x.dim(), y.dim());
    let mut m = Matrix::zeros(dx * dy, dx * dy);
    for i in 0..dx {
        for j in 0..dy {
            m.set(i * dy + j, j * dx + i, K::one());
        }
    }
    Ok(GradedMorphism::new_unchecked(&source, &target, m))
}

/// `φ^r_{X,Y}: Y*⊗X* → (X⊗Y)*`, `y_j*⊗x_i* ↦ (x_i⊗y_j)*`.
pub fn phi_right<K: Field>(x: &GradedObject<K>, y: &GradedObject<K>) -> Result<GradedMorphism<K>> {
    x.ctx().same(y.ctx())?;
    let source = y.right_dual_object().tensor(&x.right_dual_object())?;
    let target = x.tensor(y)?.right_dual_object();
    let (dx, dy) = (x.dim(), y.dim());
    let mut m = Matrix::zeros(dx * dy, dx * dy);
    for i in 0..dx {
        for j in 0..dy {
            m.set(i * dy + j, j * dx + i, K::one());
        }
    }
    Ok(GradedMorphism::new_unchecked(&source, &target, m))
}

/// `ψ(f) = (f⊗id_Y)(id_X⊗coev_Y)` for `f: X⊗*Y → Z`, giving `X → Z⊗Y`.
///
/// In coordinates `ψ(f)[(z,k), i] = f[z, (i,k)]`.
pub fn psi<K: Field>(
    f: &GradedMorphism<K>,
    x: &GradedObject<K>,
    y: &GradedObject<K>,
) -> Result<GradedMorphism<K>> {
    let expected = x.tensor(&y.left_dual_object())?;
    if !f.source().same_shape(&expected) {
        return Err(Error::ShapeMismatch("psi expects a map out of X⊗*Y".into()));
    }
    let z = f.target();
    let (dx, dy, dz) = (x.dim(), y.dim(), z.dim());
    let m = Matrix::from_fn(dz * dy, dx, |r, i| {
        let (zi, k) = (r / dy, r % dy);
        f.matrix().get(zi, i * dy + k).clone()
    });
    GradedMorphism::new(x, &z.tensor(y)?, m)
}

/// `ψ̄(g) = (id_Z⊗ev_Y)(g⊗id_{*Y})` for `g: X → Z⊗Y`, giving `X⊗*Y → Z`.
pub fn psi_bar<K: Field>(
    g: &GradedMorphism<K>,
    z: &GradedObject<K>,
    y: &GradedObject<K>,
) -> Result<GradedMorphism<K>> {
    let expected = z.tensor(y)?;
    if !g.target().same_shape(&expected) {
        return Err(Error::ShapeMismatch("psi_bar expects a map into Z⊗Y".into()));
    }
    let x = g.source();
    let (dx, dy, dz) = (x.dim(), y.dim(), z.dim());
    let m = Matrix::from_fn(dz, dx * dy, |zi, c| {
        let (i, k) = (c / dy, c % dy);
        g.matrix().get(zi * dy + k, i).clone()
    });
    GradedMorphism::new(&x.tensor(&y.left_dual_object())?, z, m)
}
