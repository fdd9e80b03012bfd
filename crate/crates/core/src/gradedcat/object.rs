use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::group::{AbelianGroup, Bicharacter, Degree};
use crate::error::{Error, Result};
use crate::exactalg::Field;

struct ContextInner<K> {
    field_order: u32,
    group: AbelianGroup,
    bichar: Bicharacter,
    chi: Vec<K>,
    chi_inv: Vec<K>,
}

/// The braided category `Vect_G^χ` over `Q(ζ_field_order)`: a finite abelian
/// grading group with a bicharacter, and a precomputed table of `χ`.
pub struct Context<K>(Arc<ContextInner<K>>);

impl<K> Clone for Context<K> {
    fn clone(&self) -> Self {
        Context(self.0.clone())
    }
}

impl<K> PartialEq for Context<K> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field_order == other.0.field_order
                && self.0.group == other.0.group
                && self.0.bichar == other.0.bichar)
    }
}

impl<K> Eq for Context<K> {}

impl<K> fmt::Debug for Context<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context")
            .field("field_order", &self.0.field_order)
            .field("group", &self.0.group)
            .field("bicharacter", &self.0.bichar)
            .finish()
    }
}

impl<K: Field> Context<K> {
    pub fn new(field_order: u32, group: AbelianGroup, bichar: Bicharacter) -> Result<Self> {
        if field_order == 0 {
            return Err(Error::InvalidCategory("field order must be positive".into()));
        }
        if !K::supports_field_order(field_order) {
            return Err(Error::InvalidCategory(format!(
                "scalar type cannot represent Q(zeta_{field_order})"
            )));
        }
        if bichar.exponents().len() != group.rank() {
            return Err(Error::InvalidCategory("bicharacter does not match group".into()));
        }
        let n = group.order();
        let mut chi = Vec::with_capacity(n * n);
        let mut chi_inv = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let e = bichar.exponent(&group, a, b);
                chi.push(K::root_of_unity(field_order, bichar.root_order(), e)?);
                chi_inv.push(K::root_of_unity(field_order, bichar.root_order(), -e)?);
            }
        }
        Ok(Context(Arc::new(ContextInner {
            field_order,
            group,
            bichar,
            chi,
            chi_inv,
        })))
    }

    /// Ordinary vector spaces over `Q(ζ_field_order)`.
    pub fn vect(field_order: u32) -> Result<Self> {
        let g = AbelianGroup::trivial();
        let b = Bicharacter::trivial(&g);
        Self::new(field_order, g, b)
    }

    /// `Vect_{Z/n}` with `χ(1, 1) = ζ_n^e`, over `Q(ζ_field_order)`.
    pub fn cyclic(field_order: u32, n: u32, e: i64) -> Result<Self> {
        let g = AbelianGroup::cyclic(n)?;
        let b = Bicharacter::new(&g, n, vec![vec![e]])?;
        Self::new(field_order, g, b)
    }

    pub fn field_order(&self) -> u32 {
        self.0.field_order
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.0.group
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.0.bichar
    }

    pub fn chi(&self, a: Degree, b: Degree) -> &K {
        &self.0.chi[a * self.0.group.order() + b]
    }

    pub fn chi_inv(&self, a: Degree, b: Degree) -> &K {
        &self.0.chi_inv[a * self.0.group.order() + b]
    }

    /// Whether every braiding is the plain flip.
    pub fn is_symmetric_trivial(&self) -> bool {
        self.0.chi.iter().all(|c| c.is_one())
    }

    pub fn root_of_unity(&self, n: u32, k: i64) -> Result<K> {
        K::root_of_unity(self.0.field_order, n, k)
    }

    pub fn same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

struct ObjectInner<K> {
    ctx: Context<K>,
    labels: Vec<String>,
    degrees: Vec<Degree>,
}

/// Finite-dimensional graded vector space with a labelled homogeneous basis.
pub struct GradedObject<K>(Arc<ObjectInner<K>>);

impl<K> Clone for GradedObject<K> {
    fn clone(&self) -> Self {
        GradedObject(self.0.clone())
    }
}

impl<K> PartialEq for GradedObject<K> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ctx == other.0.ctx
                && self.0.labels == other.0.labels
                && self.0.degrees == other.0.degrees)
    }
}

impl<K> Eq for GradedObject<K> {}

impl<K> fmt::Debug for GradedObject<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis: Vec<String> = self
            .0
            .labels
            .iter()
            .zip(&self.0.degrees)
            .map(|(l, d)| format!("{l}:{d}"))
            .collect();
        write!(f, "GradedObject[{}]", basis.join(", "))
    }
}

pub(crate) fn wrap_label(l: &str) -> String {
    if l.contains('⊗') || l.contains('⊕') {
        format!("({l})")
    } else {
        l.to_string()
    }
}

impl<K: Field> GradedObject<K> {
    /// Object with the given basis; labels must be unique and degrees must
    /// be elements of the context's group.
    pub fn new(ctx: &Context<K>, basis: Vec<(String, Degree)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (l, d) in &basis {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidStructure(format!("duplicate basis label {l:?}")));
            }
            if *d >= ctx.group().order() {
                return Err(Error::InvalidCategory(format!("degree {d} out of range")));
            }
        }
        let (labels, degrees) = basis.into_iter().unzip();
        Ok(Self::from_parts(ctx.clone(), labels, degrees))
    }

    pub(crate) fn from_parts(ctx: Context<K>, labels: Vec<String>, degrees: Vec<Degree>) -> Self {
        debug_assert_eq!(labels.len(), degrees.len());
        GradedObject(Arc::new(ObjectInner {
            ctx,
            labels,
            degrees,
        }))
    }

    /// The monoidal unit: one basis vector `1` in degree zero.
    pub fn unit(ctx: &Context<K>) -> Self {
        Self::from_parts(ctx.clone(), vec!["1".into()], vec![0])
    }

    pub fn zero(ctx: &Context<K>) -> Self {
        Self::from_parts(ctx.clone(), Vec::new(), Vec::new())
    }

    /// One-dimensional object spanned by `label` in degree `d`.
    pub fn line(ctx: &Context<K>, label: &str, d: Degree) -> Self {
        Self::from_parts(ctx.clone(), vec![label.into()], vec![d])
    }

    pub fn ctx(&self) -> &Context<K> {
        &self.0.ctx
    }

    pub fn dim(&self) -> usize {
        self.0.degrees.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.0.degrees
    }

    pub fn degree(&self, i: usize) -> Degree {
        self.0.degrees[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn is_unit(&self) -> bool {
        self.dim() == 1 && self.degree(0) == 0
    }

    /// `V ⊗ W` with basis `v_i ⊗ w_j` at index `i * dim W + j`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.ctx().same(other.ctx())?;
        let g = self.ctx().group();
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        let mut degrees = Vec::with_capacity(self.dim() * other.dim());
        for i in 0..self.dim() {
            for j in 0..other.dim() {
                labels.push(format!("{}⊗{}", self.label(i), other.label(j)));
                degrees.push(g.add(self.degree(i), other.degree(j)));
            }
        }
        Ok(Self::from_parts(self.ctx().clone(), labels, degrees))
    }

    /// Left-associated tensor power of a list.
    pub fn tensor_all(objs: &[&Self]) -> Result<Self> {
        let (first, rest) = objs
            .split_first()
            .ok_or_else(|| Error::ShapeMismatch("empty tensor product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, o| acc.tensor(o))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.ctx().same(other.ctx())?;
        let labels = self
            .labels()
            .iter()
            .map(|l| format!("{l}⊕0"))
            .chain(other.labels().iter().map(|l| format!("0⊕{l}")))
            .collect();
        let degrees = self.degrees().iter().chain(other.degrees()).copied().collect();
        Ok(Self::from_parts(self.ctx().clone(), labels, degrees))
    }

    /// Left dual `*V`: basis `*v_i` in degree `-deg v_i`.
    pub fn left_dual_object(&self) -> Self {
        let g = self.ctx().group();
        Self::from_parts(
            self.ctx().clone(),
            self.labels().iter().map(|l| format!("*{}", wrap_label(l))).collect(),
            self.degrees().iter().map(|&d| g.neg(d)).collect(),
        )
    }

    /// Right dual `V*`: basis `v_i*` in degree `-deg v_i`.
    pub fn right_dual_object(&self) -> Self {
        let g = self.ctx().group();
        Self::from_parts(
            self.ctx().clone(),
            self.labels().iter().map(|l| format!("{}*", wrap_label(l))).collect(),
            self.degrees().iter().map(|&d| g.neg(d)).collect(),
        )
    }

    /// Same basis degrees, relabelled.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::ShapeMismatch("label count".into()));
        }
        Ok(Self::from_parts(self.ctx().clone(), labels, self.degrees().to_vec()))
    }

    /// Whether two objects have the same context and degree sequence.
    pub fn same_shape(&self, other: &Self) -> bool {
        self.ctx() == other.ctx() && self.degrees() == other.degrees()
    }
}
