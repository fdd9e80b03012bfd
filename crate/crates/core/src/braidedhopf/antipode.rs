use std::collections::BTreeMap;

use super::structures::BialgebraData;
use crate::error::{Error, Result};
use crate::exactalg::{Field, LinearSystem, Matrix};
use crate::gradedcat::GradedMorphism;

/// Solves `m (S ⊗ id) Δ = u ε` for a degree-preserving `S` and verifies
/// `m (id ⊗ S) Δ = u ε` as well.
///
/// The unknowns are the entries `S[d, b]` with `|h_d| = |h_b|`; the equation
/// at `(e, a)` is `Σ_{b,c,d} Δ[(b,c), a] · S[d, b] · m[e, (d,c)] = u[e] ε[a]`.
pub fn solve_antipode<K: Field>(b: &BialgebraData<K>) -> Result<GradedMorphism<K>> {
    let h = b.carrier();
    let n = h.dim();
    let delta = b.delta().matrix();
    let m = b.m().matrix();
    let ue = b.unit_counit()?;

    let mut var_of = vec![usize::MAX; n * n];
    let mut vars = Vec::new();
    for d in 0..n {
        for bb in 0..n {
            if h.degree(d) == h.degree(bb) {
                var_of[d * n + bb] = vars.len();
                vars.push((d, bb));
            }
        }
    }
    let mut sys = LinearSystem::new(vars.len());
    for a in 0..n {
        let mut eqs: Vec<BTreeMap<usize, K>> = vec![BTreeMap::new(); n];
        for bc in 0..n * n {
            let dv = delta.get(bc, a);
            if dv.is_zero() {
                continue;
            }
            let (bb, c) = (bc / n, bc % n);
            for d in 0..n {
                let var = var_of[d * n + bb];
                if var == usize::MAX {
                    continue;
                }
                for (e, eq) in eqs.iter_mut().enumerate() {
                    let mv = m.get(e, d * n + c);
                    if !mv.is_zero() {
                        eq.entry(var).or_insert_with(K::zero).add_mul_assign(dv, mv);
                    }
                }
            }
        }
        for (e, eq) in eqs.into_iter().enumerate() {
            let coeffs: Vec<(usize, K)> = eq.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            sys.add_equation(&coeffs, ue.matrix().get(e, a));
        }
    }
    let sol = sys.solve()?;
    let mut s = Matrix::zeros(n, n);
    for ((d, bb), v) in vars.into_iter().zip(sol) {
        s.set(d, bb, v);
    }
    let s = GradedMorphism::new(h, h, s)?;
    let id = GradedMorphism::identity(h);
    if b.convolution(&s, &id)?.matrix() != ue.matrix() || b.convolution(&id, &s)?.matrix() != ue.matrix() {
        return Err(Error::NoSolution);
    }
    Ok(s)
}
