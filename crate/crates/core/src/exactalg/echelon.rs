use super::field::Field;
use super::matrix::Matrix;

const NONE: usize = usize::MAX;

/// Incrementally maintained reduced row echelon form.
///
/// Rows are inserted one at a time (sparse or dense). Each stored row is
/// kept fully reduced against all other pivots and stored sparsely on the
/// free columns, with per-column occurrence lists so that a new pivot is
/// eliminated only from the rows that mention it. The pivot of a new row is
/// its smallest free column with a nonzero entry, so sorting rows by pivot
/// yields the true RREF of everything inserted so far.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    ncols: usize,
    free_cols: Vec<usize>,
    free_pos: Vec<usize>,
    pivot_row: Vec<usize>,
    pivots: Vec<usize>,
    /// Off-pivot entries, sorted by column; every column is free.
    rows: Vec<Vec<(usize, K)>>,
    /// Rows that may mention each column (stale entries are skipped).
    occurs: Vec<Vec<usize>>,
}

/// Sorts by column, merges duplicates and drops zeros.
fn compact<K: Field>(mut v: Vec<(usize, K)>) -> Vec<(usize, K)> {
    v.sort_by_key(|e| e.0);
    let mut out: Vec<(usize, K)> = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx = lx.add_ref(&x),
            _ => {
                if let Some((_, lx)) = out.last() {
                    if lx.is_zero() {
                        out.pop();
                    }
                }
                out.push((c, x));
            }
        }
    }
    if out.last().is_some_and(|(_, x)| x.is_zero()) {
        out.pop();
    }
    out
}

impl<K: Field> Echelon<K> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            free_cols: (0..ncols).collect(),
            free_pos: (0..ncols).collect(),
            pivot_row: vec![NONE; ncols],
            pivots: Vec::new(),
            rows: Vec::new(),
            occurs: vec![Vec::new(); ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns without a pivot, ascending.
    pub fn free_cols(&self) -> &[usize] {
        &self.free_cols
    }

    /// Pivot columns, ascending.
    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NONE
    }

    /// Residual of a sparse vector modulo the row space as sorted
    /// `(free column, value)` pairs.
    pub fn reduce_to_sparse<'a, I>(&self, entries: I) -> Vec<(usize, K)>
    where
        I: IntoIterator<Item = (usize, &'a K)>,
    {
        let mut acc = Vec::new();
        for (col, v) in entries {
            if v.is_zero() {
                continue;
            }
            match self.pivot_row[col] {
                NONE => acc.push((col, v.clone())),
                r => acc.extend(self.rows[r].iter().map(|(c, x)| (*c, v.mul_ref(x).neg_ref()))),
            }
        }
        compact(acc)
    }

    /// Residual of a sparse vector modulo the row space, expressed on the
    /// free columns (in `free_cols` order). This is also the image of the
    /// vector under the canonical quotient projection.
    pub fn reduce_sparse<'a, I>(&self, entries: I) -> Vec<K>
    where
        I: IntoIterator<Item = (usize, &'a K)>,
    {
        self.densify(&self.reduce_to_sparse(entries))
    }

    pub fn reduce_dense(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.ncols, "vector length does not match echelon width");
        self.reduce_sparse(v.iter().enumerate())
    }

    fn densify(&self, v: &[(usize, K)]) -> Vec<K> {
        let mut out = vec![K::zero(); self.free_cols.len()];
        for (c, x) in v {
            out[self.free_pos[*c]] = x.clone();
        }
        out
    }

    /// Inserts a row; returns the new pivot column if the row was
    /// independent of those already present.
    pub fn insert_sparse<'a, I>(&mut self, entries: I) -> Option<usize>
    where
        I: IntoIterator<Item = (usize, &'a K)>,
    {
        let residual = self.reduce_to_sparse(entries);
        self.insert_reduced(residual)
    }

    pub fn insert_dense(&mut self, v: &[K]) -> Option<usize> {
        self.insert_sparse(v.iter().enumerate())
    }

    /// Inserts a vector already reduced by [`Echelon::reduce_sparse`].
    pub fn insert_residual(&mut self, r: Vec<K>) -> Option<usize> {
        debug_assert_eq!(r.len(), self.free_cols.len());
        let sparse = r
            .into_iter()
            .zip(&self.free_cols)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, &c)| (c, x))
            .collect();
        self.insert_reduced(sparse)
    }

    fn insert_reduced(&mut self, mut r: Vec<(usize, K)>) -> Option<usize> {
        if r.is_empty() {
            return None;
        }
        let (col, lead) = r.remove(0);
        let inv = lead.inv().expect("nonzero pivot");
        if !inv.is_one() {
            for (_, x) in r.iter_mut() {
                *x = x.mul_ref(&inv);
            }
        }
        // Eliminate `col` from every stored row that mentions it.
        for i in std::mem::take(&mut self.occurs[col]) {
            let row = &mut self.rows[i];
            let Ok(at) = row.binary_search_by_key(&col, |e| e.0) else {
                continue;
            };
            let (_, c) = row.remove(at);
            let mut merged = std::mem::take(row);
            merged.extend(r.iter().map(|(k, x)| (*k, c.mul_ref(x).neg_ref())));
            let merged = compact(merged);
            // Columns brought in by `r` may be new to this row; duplicates
            // in the lists are harmless.
            for (k, _) in &merged {
                if r.binary_search_by_key(k, |e| e.0).is_ok() {
                    self.occurs[*k].push(i);
                }
            }
            self.rows[i] = merged;
        }
        let pos = self.free_pos[col];
        self.free_cols.remove(pos);
        self.free_pos[col] = NONE;
        for (p, &c) in self.free_cols.iter().enumerate().skip(pos) {
            self.free_pos[c] = p;
        }
        let idx = self.rows.len();
        for (k, _) in &r {
            self.occurs[*k].push(idx);
        }
        self.pivot_row[col] = idx;
        self.pivots.push(col);
        self.rows.push(r);
        Some(col)
    }

    /// Entries of the reduced row with pivot `col` on the free columns.
    pub fn pivot_row_free(&self, col: usize) -> Option<Vec<K>> {
        match self.pivot_row[col] {
            NONE => None,
            r => Some(self.densify(&self.rows[r])),
        }
    }

    /// Rows of the reduced row echelon form as sorted `(column, value)`
    /// pairs, rows ordered by pivot.
    pub fn rref_sparse(&self) -> Vec<Vec<(usize, K)>> {
        self.pivot_cols()
            .into_iter()
            .map(|p| {
                let mut row = vec![(p, K::one())];
                row.extend(self.rows[self.pivot_row[p]].iter().cloned());
                row.sort_by_key(|e| e.0);
                row
            })
            .collect()
    }

    /// The reduced row echelon matrix (rank × ncols), rows sorted by pivot.
    pub fn rref_rows(&self) -> Matrix<K> {
        let rows = self.rref_sparse();
        let mut m = Matrix::zeros(rows.len(), self.ncols);
        for (i, row) in rows.into_iter().enumerate() {
            for (c, v) in row {
                m.set(i, c, v);
            }
        }
        m
    }

    /// Null space basis of the inserted rows (ncols × #free), one column per
    /// free column `f` with `x_f = 1` and all other free coordinates zero.
    pub fn kernel_basis(&self) -> Matrix<K> {
        let q = self.free_cols.len();
        let mut k = Matrix::zeros(self.ncols, q);
        for (j, &f) in self.free_cols.iter().enumerate() {
            k.set(f, j, K::one());
        }
        for (&p, row) in self.pivots.iter().zip(&self.rows) {
            for (c, v) in row {
                k.set(p, self.free_pos[*c], v.neg_ref());
            }
        }
        k
    }

    /// Projection onto the quotient of the ambient space by the row space,
    /// with quotient coordinates indexed by the free columns.
    pub fn projection(&self) -> Matrix<K> {
        self.kernel_basis().transpose()
    }

    /// Section of [`Echelon::projection`]: quotient coordinate `j` maps to
    /// the unit vector of the `j`-th free column.
    pub fn section(&self) -> Matrix<K> {
        let mut s = Matrix::zeros(self.ncols, self.free_cols.len());
        for (j, &f) in self.free_cols.iter().enumerate() {
            s.set(f, j, K::one());
        }
        s
    }
}
