use std::fmt;

use super::object::GradedObject;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};

/// Degree-preserving linear map. `matrix` has `target.dim()` rows and
/// `source.dim()` columns.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedMorphism<K: Field> {
    source: GradedObject<K>,
    target: GradedObject<K>,
    matrix: Matrix<K>,
}

impl<K: Field> fmt::Debug for GradedMorphism<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}: {:?}", self.source, self.target, self.matrix)
    }
}

fn check_degrees<K: Field>(
    source: &GradedObject<K>,
    target: &GradedObject<K>,
    matrix: &Matrix<K>,
) -> Result<()> {
    for r in 0..matrix.rows() {
        for c in 0..matrix.cols() {
            if !matrix.get(r, c).is_zero() && target.degree(r) != source.degree(c) {
                return Err(Error::NotDegreePreserving { row: r, col: c });
            }
        }
    }
    Ok(())
}

impl<K: Field> GradedMorphism<K> {
    pub fn new(source: &GradedObject<K>, target: &GradedObject<K>, matrix: Matrix<K>) -> Result<Self> {
        source.ctx().same(target.ctx())?;
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{}, morphism needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        check_degrees(source, target, &matrix)?;
        Ok(Self::new_unchecked(source, target, matrix))
    }

    pub(crate) fn new_unchecked(source: &GradedObject<K>, target: &GradedObject<K>, matrix: Matrix<K>) -> Self {
        debug_assert_eq!(matrix.shape(), (target.dim(), source.dim()));
        debug_assert!(check_degrees(source, target, &matrix).is_ok());
        GradedMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn identity(v: &GradedObject<K>) -> Self {
        Self::new_unchecked(v, v, Matrix::identity(v.dim()))
    }

    pub fn zero(source: &GradedObject<K>, target: &GradedObject<K>) -> Self {
        Self::new_unchecked(source, target, Matrix::zeros(target.dim(), source.dim()))
    }

    pub fn source(&self) -> &GradedObject<K> {
        &self.source
    }

    pub fn target(&self) -> &GradedObject<K> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<K> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<K> {
        self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if !rhs.target.same_shape(&self.source) {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {:?} after {:?}",
                self.source, rhs.target
            )));
        }
        Ok(Self::new_unchecked(
            &rhs.source,
            &self.target,
            self.matrix.try_mul(&rhs.matrix)?,
        ))
    }

    /// Composite of a chain applied right to left: `maps[0] ∘ maps[1] ∘ …`.
    pub fn compose_all(maps: &[&Self]) -> Result<Self> {
        let (last, rest) = maps
            .split_last()
            .ok_or_else(|| Error::ShapeMismatch("empty composite".into()))?;
        rest.iter().rev().try_fold((*last).clone(), |acc, f| f.compose(&acc))
    }

    /// `self ⊗ rhs`, Kronecker-aligned with the tensor basis order.
    pub fn tensor(&self, rhs: &Self) -> Result<Self> {
        let source = self.source.tensor(&rhs.source)?;
        let target = self.target.tensor(&rhs.target)?;
        Ok(Self::new_unchecked(&source, &target, self.matrix.kron(&rhs.matrix)))
    }

    /// Left-associated tensor product of a list of morphisms.
    pub fn tensor_all(maps: &[&Self]) -> Result<Self> {
        let (first, rest) = maps
            .split_first()
            .ok_or_else(|| Error::ShapeMismatch("empty tensor product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, f| acc.tensor(f))
    }

    fn check_parallel(&self, rhs: &Self) -> Result<()> {
        if !self.source.same_shape(&rhs.source) || !self.target.same_shape(&rhs.target) {
            return Err(Error::ShapeMismatch("morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_parallel(rhs)?;
        Ok(Self::new_unchecked(&self.source, &self.target, self.matrix.try_add(&rhs.matrix)?))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_parallel(rhs)?;
        Ok(Self::new_unchecked(&self.source, &self.target, self.matrix.try_sub(&rhs.matrix)?))
    }

    pub fn scale(&self, s: &K) -> Self {
        Self::new_unchecked(&self.source, &self.target, self.matrix.scale(s))
    }

    /// Same matrix between objects of the same shape (e.g. relabelled).
    pub fn retype(&self, source: &GradedObject<K>, target: &GradedObject<K>) -> Result<Self> {
        if !source.same_shape(&self.source) || !target.same_shape(&self.target) {
            return Err(Error::ShapeMismatch("retype to objects of different shape".into()));
        }
        Ok(Self::new_unchecked(source, target, self.matrix.clone()))
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.matrix.inverse()?;
        Ok(Self::new_unchecked(&self.target, &self.source, inv))
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.rank() == self.source.dim()
    }

    /// Left dual `*f: *W → *V` of `f: V → W`; with the dual-basis
    /// convention its matrix is the transpose.
    pub fn left_dual(&self) -> Self {
        Self::new_unchecked(
            &self.target.left_dual_object(),
            &self.source.left_dual_object(),
            self.matrix.transpose(),
        )
    }

    /// Right dual `f*: W* → V*`.
    pub fn right_dual(&self) -> Self {
        Self::new_unchecked(
            &self.target.right_dual_object(),
            &self.source.right_dual_object(),
            self.matrix.transpose(),
        )
    }

    /// Braiding `σ_{V,W}: V⊗W → W⊗V`, `v_i⊗w_j ↦ χ(|v_i|,|w_j|) w_j⊗v_i`.
    pub fn braiding(v: &GradedObject<K>, w: &GradedObject<K>) -> Result<Self> {
        let source = v.tensor(w)?;
        let target = w.tensor(v)?;
        let ctx = v.ctx();
        let (dv, dw) = (v.dim(), w.dim());
        let mut m = Matrix::zeros(dv * dw, dv * dw);
        for i in 0..dv {
            for j in 0..dw {
                m.set(j * dv + i, i * dw + j, ctx.chi(v.degree(i), w.degree(j)).clone());
            }
        }
        Ok(Self::new_unchecked(&source, &target, m))
    }

    /// `(id_X ⊗ σ_{V,W} ⊗ id_Y) ∘ self` for `self` landing in `X⊗V⊗W⊗Y`,
    /// computed by permuting rows instead of building the braiding.
    pub fn then_braid_middle(
        &self,
        x: &GradedObject<K>,
        v: &GradedObject<K>,
        w: &GradedObject<K>,
        y: &GradedObject<K>,
    ) -> Result<Self> {
        let (dx, dv, dw, dy) = (x.dim(), v.dim(), w.dim(), y.dim());
        if self.target.dim() != dx * dv * dw * dy {
            return Err(Error::ShapeMismatch(format!(
                "target of dimension {} is not {dx}*{dv}*{dw}*{dy}",
                self.target.dim()
            )));
        }
        let target = GradedObject::tensor_all(&[x, w, v, y])?;
        let ctx = x.ctx();
        let cols = self.matrix.cols();
        let mut m = Matrix::zeros(self.matrix.rows(), cols);
        for a in 0..dx {
            for b in 0..dv {
                for c in 0..dw {
                    let chi = ctx.chi(v.degree(b), w.degree(c));
                    for d in 0..dy {
                        let from = ((a * dv + b) * dw + c) * dy + d;
                        let to = ((a * dw + c) * dv + b) * dy + d;
                        for col in 0..cols {
                            let e = self.matrix.get(from, col);
                            if !e.is_zero() {
                                m.set(to, col, e.mul_ref(chi));
                            }
                        }
                    }
                }
            }
        }
        Ok(Self::new_unchecked(&self.source, &target, m))
    }

    /// Inverse braiding `σ_{V,W}^{-1}: W⊗V → V⊗W`.
    pub fn braiding_inv(v: &GradedObject<K>, w: &GradedObject<K>) -> Result<Self> {
        let source = w.tensor(v)?;
        let target = v.tensor(w)?;
        let ctx = v.ctx();
        let (dv, dw) = (v.dim(), w.dim());
        let mut m = Matrix::zeros(dv * dw, dv * dw);
        for i in 0..dv {
            for j in 0..dw {
                m.set(i * dw + j, j * dv + i, ctx.chi_inv(v.degree(i), w.degree(j)).clone());
            }
        }
        Ok(Self::new_unchecked(&source, &target, m))
    }

    /// Injections and projections of `V ⊕ W`.
    pub fn direct_sum_maps(v: &GradedObject<K>, w: &GradedObject<K>) -> Result<DirectSum<K>> {
        let sum = v.direct_sum(w)?;
        let (dv, dw) = (v.dim(), w.dim());
        let inj1 = Matrix::from_fn(dv + dw, dv, |r, c| if r == c { K::one() } else { K::zero() });
        let inj2 = Matrix::from_fn(dv + dw, dw, |r, c| if r == c + dv { K::one() } else { K::zero() });
        Ok(DirectSum {
            inj_left: Self::new_unchecked(v, &sum, inj1.clone()),
            inj_right: Self::new_unchecked(w, &sum, inj2.clone()),
            proj_left: Self::new_unchecked(&sum, v, inj1.transpose()),
            proj_right: Self::new_unchecked(&sum, w, inj2.transpose()),
            sum,
        })
    }

    /// Sum `f ⊕ g: V ⊕ V' → W ⊕ W'`.
    pub fn direct_sum(&self, rhs: &Self) -> Result<Self> {
        let source = self.source.direct_sum(&rhs.source)?;
        let target = self.target.direct_sum(&rhs.target)?;
        let (r1, c1) = self.matrix.shape();
        let m = Matrix::from_fn(target.dim(), source.dim(), |r, c| {
            if r < r1 && c < c1 {
                self.matrix.get(r, c).clone()
            } else if r >= r1 && c >= c1 {
                rhs.matrix.get(r - r1, c - c1).clone()
            } else {
                K::zero()
            }
        });
        Ok(Self::new_unchecked(&source, &target, m))
    }
}

/// Biproduct data for `V ⊕ W`.
#[derive(Clone, Debug)]
pub struct DirectSum<K: Field> {
    pub sum: GradedObject<K>,
    pub inj_left: GradedMorphism<K>,
    pub inj_right: GradedMorphism<K>,
    pub proj_left: GradedMorphism<K>,
    pub proj_right: GradedMorphism<K>,
}
