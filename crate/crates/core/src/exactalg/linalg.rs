use super::echelon::Echelon;
use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Reduced row echelon form and ascending pivot columns.
pub fn rref<K: Field>(m: &Matrix<K>) -> (Matrix<K>, Vec<usize>) {
    let mut e = Echelon::new(m.cols());
    for r in 0..m.rows() {
        e.insert_dense(m.row(r));
    }
    let reduced = e.rref_rows();
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for r in 0..reduced.rows() {
        for c in 0..m.cols() {
            out.set(r, c, reduced.get(r, c).clone());
        }
    }
    (out, e.pivot_cols())
}

/// Basis of the null space, as columns.
pub fn kernel<K: Field>(m: &Matrix<K>) -> Matrix<K> {
    let mut e = Echelon::new(m.cols());
    for r in 0..m.rows() {
        e.insert_dense(m.row(r));
    }
    e.kernel_basis()
}

/// Quotient of an ambient space by the span of a set of relation vectors,
/// with an explicit projection and section.
///
/// The relation span is kept as a reduced basis of sparse rows (its RREF);
/// [`QuotientPresentation::relation_matrix`] lays them out as columns, so
/// its rank equals its column count. Coend ambients are large enough that
/// the dense form is only built on request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation<K: Field> {
    pub ambient_dim: usize,
    pub relations: Vec<Vec<(usize, K)>>,
    pub quotient_dim: usize,
    pub projection: Matrix<K>,
    pub section: Matrix<K>,
    /// Ambient coordinates whose unit vectors form the section.
    pub basis_coords: Vec<usize>,
}

impl<K: Field> QuotientPresentation<K> {
    pub fn from_echelon(e: &Echelon<K>) -> Self {
        QuotientPresentation {
            ambient_dim: e.ncols(),
            relations: e.rref_sparse(),
            quotient_dim: e.free_cols().len(),
            projection: e.projection(),
            section: e.section(),
            basis_coords: e.free_cols().to_vec(),
        }
    }

    /// Relation basis as the columns of an `ambient_dim × rank` matrix.
    pub fn relation_matrix(&self) -> Matrix<K> {
        let mut m = Matrix::zeros(self.ambient_dim, self.relations.len());
        for (j, row) in self.relations.iter().enumerate() {
            for (c, v) in row {
                m.set(*c, j, v.clone());
            }
        }
        m
    }
}

/// Cokernel of `m`: the codomain modulo the column space of `m`.
pub fn cokernel<K: Field>(m: &Matrix<K>) -> QuotientPresentation<K> {
    let mut e = Echelon::new(m.rows());
    for c in 0..m.cols() {
        let col = m.column(c);
        e.insert_sparse(col.iter().enumerate());
    }
    QuotientPresentation::from_echelon(&e)
}

/// Exact linear system assembled one sparse equation at a time.
#[derive(Clone, Debug)]
pub struct LinearSystem<K> {
    nvars: usize,
    echelon: Echelon<K>,
    inconsistent: bool,
}

impl<K: Field> LinearSystem<K> {
    pub fn new(nvars: usize) -> Self {
        LinearSystem {
            nvars,
            echelon: Echelon::new(nvars + 1),
            inconsistent: false,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `Σ coeff · x_var = rhs`.
    pub fn add_equation(&mut self, coeffs: &[(usize, K)], rhs: &K) {
        let entries = coeffs
            .iter()
            .map(|(v, c)| (*v, c))
            .chain(std::iter::once((self.nvars, rhs)));
        if self.echelon.insert_sparse(entries) == Some(self.nvars) {
            self.inconsistent = true;
        }
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    /// Dimension of the solution space of the homogeneous part.
    pub fn nullity(&self) -> usize {
        let rank = self.echelon.rank() - usize::from(self.inconsistent);
        self.nvars - rank
    }

    /// The unique solution.
    pub fn solve(&self) -> Result<Vec<K>> {
        if self.inconsistent {
            return Err(Error::NoSolution);
        }
        let dim = self.nullity();
        if dim > 0 {
            return Err(Error::NonUnique { dim });
        }
        // Only the augmented column is free; x_p = row_p[aug].
        Ok((0..self.nvars)
            .map(|p| {
                self.echelon
                    .pivot_row_free(p)
                    .expect("full rank")
                    .into_iter()
                    .next()
                    .unwrap_or_else(K::zero)
            })
            .collect())
    }

    /// Basis of the homogeneous solution space (nvars × nullity), valid when
    /// every equation was added with zero right-hand side.
    pub fn homogeneous_basis(&self) -> Matrix<K> {
        let k = self.echelon.kernel_basis();
        // Drop the augmented coordinate and the solution with x_aug = 1.
        let keep: Vec<usize> = self
            .echelon
            .free_cols()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != self.nvars)
            .map(|(j, _)| j)
            .collect();
        let rows: Vec<usize> = (0..self.nvars).collect();
        k.select_rows(&rows).select_columns(&keep)
    }
}

/// Solves for the unique `r × c` matrix `X` with `A_i X B_i = C_i` for all
/// constraints, then re-verifies every constraint.
pub fn solve_unknown_map<K: Field>(
    constraints: &[(Matrix<K>, Matrix<K>, Matrix<K>)],
    shape: (usize, usize),
) -> Result<Matrix<K>> {
    let (r, c) = shape;
    for (a, b, cc) in constraints {
        if a.cols() != r || b.rows() != c || cc.rows() != a.rows() || cc.cols() != b.cols() {
            return Err(Error::ShapeMismatch(format!(
                "constraint {}x{} · X({r}x{c}) · {}x{} = {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols(),
                cc.rows(),
                cc.cols()
            )));
        }
    }
    let mut sys = LinearSystem::new(r * c);
    let mut coeffs = Vec::new();
    for (a, b, cc) in constraints {
        for p in 0..a.rows() {
            for q in 0..b.cols() {
                coeffs.clear();
                for s in 0..r {
                    let asv = a.get(p, s);
                    if asv.is_zero() {
                        continue;
                    }
                    for t in 0..c {
                        let btv = b.get(t, q);
                        if !btv.is_zero() {
                            coeffs.push((s * c + t, asv.mul_ref(btv)));
                        }
                    }
                }
                sys.add_equation(&coeffs, cc.get(p, q));
            }
        }
        if !sys.is_consistent() {
            return Err(Error::NoSolution);
        }
    }
    let x = Matrix::from_vec(r, c, sys.solve()?)?;
    for (a, b, cc) in constraints {
        if &a.try_mul(&x)?.try_mul(b)? != cc {
            return Err(Error::NoSolution);
        }
    }
    Ok(x)
}

/// Inverse through Gauss-Jordan on `[M | I]`.
pub fn invert<K: Field>(m: &Matrix<K>) -> Result<Matrix<K>> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
    }
    let mut e = Echelon::new(2 * n);
    let one = K::one();
    for r in 0..n {
        let entries = m
            .row(r)
            .iter()
            .enumerate()
            .chain(std::iter::once((n + r, &one)));
        e.insert_sparse(entries);
    }
    if (0..n).any(|c| !e.is_pivot(c)) {
        return Err(Error::DivisionByZero);
    }
    let mut inv = Matrix::zeros(n, n);
    for p in 0..n {
        for (j, v) in e.pivot_row_free(p).expect("pivot").into_iter().enumerate() {
            inv.set(p, j, v);
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rational;

    type M = Matrix<Rational>;

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&M::from_i64_rows(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, M::from_i64_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
        let (r, p) = rref(&M::identity(3));
        assert_eq!(r, M::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = rref(&M::zeros(2, 3));
        assert!(r.is_zero());
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&M::from_i64_rows(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, M::from_i64_rows(&[&[-1], &[1]]));
        assert_eq!(kernel(&M::from_i64_rows(&[&[2, 1], &[1, 1]])).cols(), 0);
        assert_eq!(kernel(&M::zeros(2, 3)), M::identity(3));
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&M::identity(3)).quotient_dim, 0);
        let q = cokernel(&M::zeros(3, 2));
        assert_eq!(q.quotient_dim, 3);
        assert_eq!(q.projection, M::identity(3));
        let q = cokernel(&M::from_i64_rows(&[&[1], &[1]]));
        assert_eq!(q.quotient_dim, 1);
        assert!(q.projection.try_mul(&M::from_i64_rows(&[&[1], &[1]])).unwrap().is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = M::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let c = M::from_i64_rows(&[&[1, 0], &[3, 5]]);
        let x = solve_unknown_map(&[(M::identity(2), b.clone(), c.clone())], (2, 2)).unwrap();
        assert_eq!(x, c.try_mul(&invert(&b).unwrap()).unwrap());

        let c1 = M::identity(2);
        let c2 = M::zeros(2, 2);
        let r = solve_unknown_map(
            &[
                (M::identity(2), M::identity(2), c1),
                (M::identity(2), M::identity(2), c2),
            ],
            (2, 2),
        );
        assert_eq!(r, Err(Error::NoSolution));
        assert_eq!(solve_unknown_map::<Rational>(&[], (1, 2)), Err(Error::NonUnique { dim: 2 }));
    }

    #[test]
    fn homogeneous_basis_spans_kernel() {
        let mut sys = LinearSystem::<Rational>::new(3);
        sys.add_equation(&[(0, Rational::from_integer(1)), (2, Rational::from_integer(-1))], &Rational::from_integer(0));
        let b = sys.homogeneous_basis();
        assert_eq!(b.cols(), 2);
        let m = M::from_i64_rows(&[&[1, 0, -1]]);
        assert!(m.try_mul(&b).unwrap().is_zero());
    }
}
