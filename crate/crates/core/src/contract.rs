//! Quasi-gradings, their contractions, and the explicit isomorphisms between
//! truncated current algebras and contractions of `n·q`.

use serde::{Deserialize, Serialize};

use crate::autos::{
    eigenspace_grading, extend_to_copies, fixed_subalgebra, vandermonde_vector, Automorphism,
    PeriodicGrading,
};
use crate::error::{Error, Result};
use crate::liealg::{direct_sum, LieAlgebra};
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::scalars::{lcm, Cyclotomic};
use crate::takiff::lift_automorphism;

/// A decomposition `q = ⊕ q_i` (`i < k`) with `[q_i, q_j] ⊆ q_{i+j}` for `i + j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiGrading {
    /// The algebra in the adapted basis, tagged by block.
    pub algebra: LieAlgebra,
    pub k: usize,
    pub blocks: Vec<Vec<usize>>,
    /// Columns are the adapted basis vectors in the original coordinates.
    pub base_change: Matrix,
}

fn tags_from_blocks(blocks: &[Vec<usize>], dim: usize) -> Result<Vec<usize>> {
    let mut tags = vec![usize::MAX; dim];
    for (b, idx) in blocks.iter().enumerate() {
        for &i in idx {
            if i >= dim || tags[i] != usize::MAX {
                return Err(Error::Invalid(format!("blocks do not partition 0..{dim}")));
            }
            tags[i] = b;
        }
    }
    if tags.contains(&usize::MAX) {
        return Err(Error::Invalid(format!("blocks do not cover 0..{dim}")));
    }
    Ok(tags)
}

impl QuasiGrading {
    /// Rewrites `original` in the basis given by the columns of `base_change`
    /// and attaches the blocks (indices into the new basis).
    pub fn new(original: &LieAlgebra, base_change: Matrix, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let d = original.dim();
        let tags = tags_from_blocks(&blocks, d)?;
        let labels = (0..d)
            .map(|i| {
                let b = tags[i];
                let r = blocks[b].iter().position(|&x| x == i).unwrap();
                format!("q{b}.{r}")
            })
            .collect();
        let algebra = original.change_basis(&base_change, labels)?.with_tags(Some(tags))?;
        Ok(QuasiGrading {
            algebra,
            k: blocks.len(),
            blocks,
            base_change,
        })
    }

    /// Blocks given directly on the basis of `algebra`.
    pub fn from_adapted(algebra: &LieAlgebra, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let tags = tags_from_blocks(&blocks, algebra.dim())?;
        Ok(QuasiGrading {
            algebra: algebra.clone().with_tags(Some(tags))?,
            k: blocks.len(),
            blocks,
            base_change: Matrix::identity(algebra.dim(), algebra.conductor()),
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// Block index of every adapted basis vector.
    pub fn block_tags(&self) -> Vec<usize> {
        self.algebra
            .tags()
            .map(|t| t.to_vec())
            .unwrap_or_else(|| tags_from_blocks(&self.blocks, self.algebra.dim()).unwrap())
    }

    /// Maps original coordinates to adapted ones.
    pub fn adapter(&self) -> Result<Matrix> {
        self.base_change.inverse()
    }
}

impl From<&PeriodicGrading> for QuasiGrading {
    fn from(g: &PeriodicGrading) -> Self {
        QuasiGrading {
            algebra: g.algebra.clone(),
            k: g.k,
            blocks: g.blocks.clone(),
            base_change: g.base_change.clone(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QuasiJson {
    k: usize,
    blocks: Vec<Vec<usize>>,
    base_change: Matrix,
}

impl Serialize for QuasiGrading {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuasiJson {
            k: self.k,
            blocks: self.blocks.clone(),
            base_change: self.base_change.clone(),
        }
        .serialize(s)
    }
}

impl QuasiGrading {
    pub fn from_json(original: &LieAlgebra, v: serde_json::Value) -> Result<Self> {
        let j: QuasiJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        if j.k != j.blocks.len() {
            return Err(Error::Parse("k differs from the number of blocks".into()));
        }
        Self::new(original, j.base_change, j.blocks)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiReport {
    pub pass: bool,
    /// Basis pairs `(a, b)` whose bracket leaves block `tag(a) + tag(b)`.
    pub witnesses: Vec<(usize, usize)>,
}

pub fn validate_quasigrading(q: &QuasiGrading) -> QuasiReport {
    let tags = q.block_tags();
    let mut witnesses = Vec::new();
    for (a, b, row) in q.algebra.brackets() {
        let s = tags[a] + tags[b];
        if s < q.k && row.iter().any(|(t, _)| tags[*t] != s) {
            witnesses.push((a, b));
        }
    }
    QuasiReport {
        pass: witnesses.is_empty() && q.k == q.blocks.len(),
        witnesses,
    }
}

/// The contracted algebra `C_Γ(q)`: brackets between blocks `i`, `j` with
/// `i + j >= k` are set to zero. Tagged by block.
pub fn contract(q: &QuasiGrading) -> Result<LieAlgebra> {
    let report = validate_quasigrading(q);
    if let Some(&(a, b)) = report.witnesses.first() {
        let tags = q.block_tags();
        return Err(Error::InvalidQuasiGrading(a, b, tags[a] + tags[b]));
    }
    let tags = q.block_tags();
    let mut entries = Vec::new();
    for (a, b, row) in q.algebra.brackets() {
        if tags[a] + tags[b] < q.k {
            for (s, c) in row {
                entries.push((a, b, *s, c.clone()));
            }
        }
    }
    LieAlgebra::from_structure_constants(
        q.algebra.dim(),
        q.algebra.conductor(),
        q.algebra.labels().to_vec(),
        entries,
    )?
    .with_tags(Some(tags))
}

/// One structure constant of `q_(t)`, equal to `coeff * t^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaledConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub exponent: i64,
    pub coeff: Cyclotomic,
}

/// Structure constants of `[x, y]_(t) = c_t^{-1} [c_t x, c_t y]` with
/// `c_t = t^i` on block `i`, as monomials in `t`.
pub fn scaled_constants(q: &QuasiGrading) -> Vec<ScaledConstant> {
    let tags = q.block_tags();
    let mut out = Vec::new();
    for (a, b, row) in q.algebra.brackets() {
        for (s, c) in row {
            out.push(ScaledConstant {
                i: a,
                j: b,
                k: *s,
                exponent: tags[a] as i64 + tags[b] as i64 - tags[*s] as i64,
                coeff: c.clone(),
            });
        }
    }
    out
}

/// `q_(t)` for a nonzero scalar `t`.
pub fn scaled_algebra(q: &QuasiGrading, t: &Cyclotomic) -> Result<LieAlgebra> {
    if t.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let t = t.lift(q.algebra.conductor())?;
    let entries = scaled_constants(q)
        .into_iter()
        .map(|sc| Ok((sc.i, sc.j, sc.k, &sc.coeff * &t.pow(sc.exponent)?)))
        .collect::<Result<Vec<_>>>()?;
    LieAlgebra::from_structure_constants(
        q.algebra.dim(),
        q.algebra.conductor(),
        q.algebra.labels().to_vec(),
        entries,
    )
}

/// The constant term in `t` of `q_(t)`.
pub fn scaled_limit(q: &QuasiGrading) -> Result<LieAlgebra> {
    let entries = scaled_constants(q)
        .into_iter()
        .filter(|sc| sc.exponent == 0)
        .map(|sc| (sc.i, sc.j, sc.k, sc.coeff));
    LieAlgebra::from_structure_constants(
        q.algebra.dim(),
        q.algebra.conductor(),
        q.algebra.labels().to_vec(),
        entries,
    )?
    .with_tags(Some(q.block_tags()))
}

/// `h ⋉ m` for the coordinate subalgebra `h` spanned by `h_block`, whose
/// complement `m` must be `h`-stable.
pub fn isotropy_contraction(g: &LieAlgebra, h_block: &[usize]) -> Result<LieAlgebra> {
    let d = g.dim();
    let mut in_h = vec![false; d];
    for &i in h_block {
        if i >= d {
            return Err(Error::Invalid(format!("index {i} out of range")));
        }
        in_h[i] = true;
    }
    for (a, b, row) in g.brackets() {
        match (in_h[a], in_h[b]) {
            (true, true) => {
                if row.iter().any(|(s, _)| !in_h[*s]) {
                    return Err(Error::NotSubalgebra(format!("[e_{a}, e_{b}] leaves h")));
                }
            }
            (true, false) | (false, true)
                if row.iter().any(|(s, _)| in_h[*s]) => {
                    return Err(Error::NotSubalgebra(format!(
                        "complement is not h-stable at ({a}, {b})"
                    )));
                }
            _ => {}
        }
    }
    let h: Vec<usize> = (0..d).filter(|&i| in_h[i]).collect();
    let m: Vec<usize> = (0..d).filter(|&i| !in_h[i]).collect();
    contract(&QuasiGrading::from_adapted(g, vec![h, m])?)
}

/// The order `k + 1` quasi-grading on `q_0 ∔ q` built from a periodic
/// `theta` of order `k`: the diagonal copy of `q_0`, then `q_1, ..., q_{k-1}`
/// inside `q`, then `q_0` inside `q`. The first summand uses the adapted basis
/// of `q_0` from [`eigenspace_grading`].
pub fn quasi_from_fixedpoints(theta: &Automorphism) -> Result<QuasiGrading> {
    let gr = eigenspace_grading(theta)?;
    quasi_from_grading(theta.algebra(), &gr)
}

pub fn quasi_from_grading(g: &LieAlgebra, gr: &PeriodicGrading) -> Result<QuasiGrading> {
    let n = g.conductor();
    let d = g.dim();
    let incl = gr.component_basis(0);
    let f = incl.cols();
    let labels = (0..f).map(|r| format!("g0.{r}")).collect();
    let q0 = g.restrict_to(&incl, labels)?;
    let sum = direct_sum(&[&q0, g])?;
    let total = f + d;
    let mut cols: Vec<Vector> = Vec::with_capacity(total);
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(gr.k + 1);
    let embed = |head: Option<usize>, tail: Vector| -> Vector {
        let mut v = zero_vector(total, n);
        if let Some(r) = head {
            v[r] = Cyclotomic::one(n);
        }
        for (i, x) in tail.into_iter().enumerate() {
            v[f + i] = x;
        }
        v
    };
    blocks.push((0..f).collect());
    for r in 0..f {
        cols.push(embed(Some(r), incl.column(r)));
    }
    for i in 1..gr.k {
        blocks.push((cols.len()..cols.len() + gr.blocks[i].len()).collect());
        for &a in &gr.blocks[i] {
            cols.push(embed(None, gr.base_change.column(a)));
        }
    }
    blocks.push((cols.len()..cols.len() + f).collect());
    for r in 0..f {
        cols.push(embed(None, incl.column(r)));
    }
    let base = Matrix::from_columns(&cols, total, n);
    QuasiGrading::new(&sum, base, blocks)
}

/// First pair violating the two-case law of a fixed-point quasi-grading of
/// order `k + 1`: `[e_i, e_j] ⊆ e_{i+j}` if `i + j <= k`, else `e_{i+j-k}`.
pub fn mixed_law_defect(q: &QuasiGrading) -> Option<(usize, usize)> {
    let k = q.k - 1;
    let tags = q.block_tags();
    for (a, b, row) in q.algebra.brackets() {
        let s = tags[a] + tags[b];
        let target = if s <= k { s } else { s - k };
        if row.iter().any(|(t, _)| tags[*t] != target) {
            return Some((a, b));
        }
    }
    None
}

/// `q_0 ⋉ q_1 ⋉ ... ⋉ q_{m-1}` (indices mod `k`) built from a grading:
/// level `j` is a copy of block `j mod k`, and brackets landing beyond level
/// `m - 1` vanish. Tagged by level.
pub fn semidirect_tower(gr: &PeriodicGrading, m: usize) -> Result<LieAlgebra> {
    let (levels, _) = tower_layout(gr, m);
    let mut pos = std::collections::HashMap::new();
    for (idx, &(j, a)) in levels.iter().enumerate() {
        pos.insert((j, a), idx);
    }
    let mut entries = Vec::new();
    for (x, &(j, a)) in levels.iter().enumerate() {
        for (y, &(jj, b)) in levels.iter().enumerate().skip(x + 1) {
            if j + jj >= m {
                continue;
            }
            for (s, c) in gr.algebra.basis_bracket(a, b) {
                entries.push((x, y, pos[&(j + jj, *s)], c.clone()));
            }
        }
    }
    let labels = levels
        .iter()
        .map(|&(j, a)| format!("{}[{j}]", gr.algebra.labels()[a]))
        .collect();
    let tags = levels.iter().map(|&(j, _)| j).collect();
    LieAlgebra::from_structure_constants(levels.len(), gr.algebra.conductor(), labels, entries)?
        .with_tags(Some(tags))
}

/// `(level, adapted index)` of each tower basis vector, and level offsets.
fn tower_layout(gr: &PeriodicGrading, m: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut levels = Vec::new();
    let mut offsets = Vec::new();
    for j in 0..m {
        offsets.push(levels.len());
        for &a in &gr.blocks[j % gr.k] {
            levels.push((j, a));
        }
    }
    (levels, offsets)
}

/// An algebra isomorphism candidate: `map` has the images of `source`'s basis
/// as columns, in `target`'s coordinates.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub source: LieAlgebra,
    pub target: LieAlgebra,
    pub map: Matrix,
}

impl Comparison {
    pub fn holds(&self) -> Result<bool> {
        crate::liealg::compare_structure(&self.source, &self.target, &self.map)
    }
}

fn coords_in(basis: &Matrix, v: &[Cyclotomic]) -> Result<Vector> {
    basis
        .solve(v)
        .ok_or_else(|| Error::Construction("vector outside the expected subspace".into()))
}

/// Tower with `m` levels against the fixed-point algebra of the lifted
/// automorphism on `g<m>`, under `x[j] -> x ⊗ T^j`.
pub fn tower_vs_hat_fixed(theta: &Automorphism, m: usize) -> Result<Comparison> {
    let gr = eigenspace_grading(theta)?;
    let tower = semidirect_tower(&gr, m)?;
    let (t, hat) = lift_automorphism(theta, m)?;
    let fixed = fixed_subalgebra(&hat)?;
    let d = theta.algebra().dim();
    let n = theta.conductor();
    let (levels, _) = tower_layout(&gr, m);
    let mut cols = Vec::with_capacity(levels.len());
    for &(j, a) in &levels {
        let mut v = zero_vector(t.algebra.dim(), n);
        for (i, x) in gr.base_change.column(a).into_iter().enumerate() {
            v[j * d + i] = x;
        }
        cols.push(coords_in(&fixed.inclusion, &v)?);
    }
    let map = Matrix::from_columns(&cols, fixed.algebra.dim(), n);
    Ok(Comparison {
        source: tower,
        target: fixed.algebra,
        map,
    })
}

/// Tower with `k` levels against the contraction of the grading itself,
/// under the identity on levels.
pub fn tower_vs_cyclic_contraction(gr: &PeriodicGrading) -> Result<Comparison> {
    let tower = semidirect_tower(gr, gr.k)?;
    let target = contract(&QuasiGrading::from(gr))?;
    let (levels, _) = tower_layout(gr, gr.k);
    let n = gr.algebra.conductor();
    let cols: Vec<Vector> = levels
        .iter()
        .map(|&(_, a)| crate::linalg::unit_vector(target.dim(), a, n))
        .collect();
    let map = Matrix::from_columns(&cols, target.dim(), n);
    Ok(Comparison {
        source: tower,
        target,
        map,
    })
}

/// Lifts `theta` to a conductor containing the `n·|theta|`-th roots of unity.
pub fn lift_for_copies(theta: &Automorphism, n: usize) -> Result<Automorphism> {
    theta.lift(lcm(theta.conductor(), (n * theta.order()) as u32))
}

/// Tower with `nk` levels against `C_{theta~}(n·q)`, under the Vandermonde
/// map `x[j] -> (x, mu^j x, ..., mu^{(n-1)j} x)`.
pub fn tower_vs_copies_contraction(theta: &Automorphism, n: usize) -> Result<Comparison> {
    let theta = lift_for_copies(theta, n)?;
    let k = theta.order();
    let gr = eigenspace_grading(&theta)?;
    let tower = semidirect_tower(&gr, n * k)?;
    let tt = extend_to_copies(&theta, n)?;
    let big = eigenspace_grading(&tt)?;
    let q = QuasiGrading::from(&big);
    let target = contract(&q)?;
    let adapter = q.adapter()?;
    let cond = theta.conductor();
    let (levels, _) = tower_layout(&gr, n * k);
    let mut cols = Vec::with_capacity(levels.len());
    for &(j, a) in &levels {
        let v = vandermonde_vector(&gr.base_change.column(a), n, k, j, cond)?;
        cols.push(adapter.mul_vec(&v)?);
    }
    let map = Matrix::from_columns(&cols, target.dim(), cond);
    Ok(Comparison {
        source: tower,
        target,
        map,
    })
}

/// Tower with `nk + 1` levels against the contraction of the fixed-point
/// quasi-grading on `(nq)_0 ∔ n·q` built from `theta~`.
pub fn tower_vs_fixedpoint_contraction(theta: &Automorphism, n: usize) -> Result<Comparison> {
    let theta = lift_for_copies(theta, n)?;
    let k = theta.order();
    let nk = n * k;
    let gr = eigenspace_grading(&theta)?;
    let tower = semidirect_tower(&gr, nk + 1)?;
    let tt = extend_to_copies(&theta, n)?;
    let big = eigenspace_grading(&tt)?;
    let q = quasi_from_grading(tt.algebra(), &big)?;
    let target = contract(&q)?;
    let adapter = q.adapter()?;
    let cond = theta.conductor();
    let incl0 = big.component_basis(0);
    let f = incl0.cols();
    let total = f + tt.algebra().dim();
    let (levels, _) = tower_layout(&gr, nk + 1);
    let mut cols = Vec::with_capacity(levels.len());
    for &(j, a) in &levels {
        let v = vandermonde_vector(&gr.base_change.column(a), n, k, j % nk, cond)?;
        let mut w = zero_vector(total, cond);
        if j == 0 {
            for (r, c) in coords_in(&incl0, &v)?.into_iter().enumerate() {
                w[r] = c;
            }
        }
        for (i, x) in v.into_iter().enumerate() {
            w[f + i] = x;
        }
        cols.push(adapter.mul_vec(&w)?);
    }
    let map = Matrix::from_columns(&cols, target.dim(), cond);
    Ok(Comparison {
        source: tower,
        target,
        map,
    })
}

/// Convenience: the algebra `g<nk>_0` built as a tower from `theta`.
pub fn fixed_tower(theta: &Automorphism, levels: usize) -> Result<(PeriodicGrading, LieAlgebra)> {
    let gr = eigenspace_grading(theta)?;
    let t = semidirect_tower(&gr, levels)?;
    Ok((gr, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::autos::{cyclic_shift, outer_involution, InvolutionVariant};
    use crate::liealg::{compare_structure, construct_classical, ClassicalKind};
    use crate::takiff::takiff;

    fn involution(n: usize) -> Automorphism {
        let g = construct_classical(ClassicalKind::Sl, n).unwrap();
        outer_involution(&g, InvolutionVariant::NegTranspose)
            .unwrap()
            .lift_for_grading()
            .unwrap()
    }

    #[test]
    fn gradings_are_quasi_gradings() {
        let th = involution(3);
        let gr = eigenspace_grading(&th).unwrap();
        let q = QuasiGrading::from(&gr);
        assert!(validate_quasigrading(&q).pass);
        let c = contract(&q).unwrap();
        assert!(c.validate().passed);
        // the symmetric part becomes abelian
        for &a in &q.blocks[1] {
            for &b in &q.blocks[1] {
                assert!(c.basis_bracket(a, b).is_empty());
            }
        }
    }

    #[test]
    fn trivial_grading_contracts_to_itself() {
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let q = QuasiGrading::from_adapted(&g, vec![(0..3).collect()]).unwrap();
        let c = contract(&q).unwrap();
        assert!(compare_structure(&g, &c, &Matrix::identity(3, 1)).unwrap());
    }

    #[test]
    fn injected_violation() {
        // h in block 1 and e, f in block 0: [e, f] = h must lie in block 0
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let q = QuasiGrading::from_adapted(&g, vec![vec![1, 2], vec![0]]).unwrap();
        let r = validate_quasigrading(&q);
        assert!(!r.pass);
        assert!(r.witnesses.contains(&(1, 2)));
        assert!(contract(&q).is_err());
    }

    #[test]
    fn scaled_family() {
        let th = involution(3);
        let q = QuasiGrading::from(&eigenspace_grading(&th).unwrap());
        let one = Cyclotomic::one(2);
        assert_eq!(scaled_algebra(&q, &one).unwrap().brackets().len(), q.algebra.brackets().len());
        let two = Cyclotomic::from_int(2, 2);
        let s2 = scaled_algebra(&q, &two).unwrap();
        assert!(s2.validate().passed);
        assert_eq!(scaled_limit(&q).unwrap(), contract(&q).unwrap());
        let tags = q.block_tags();
        for sc in scaled_constants(&q) {
            assert_eq!(sc.exponent > 0, tags[sc.i] + tags[sc.j] >= q.k);
        }
        assert!(scaled_algebra(&q, &Cyclotomic::zero(2)).is_err());
    }

    #[test]
    fn isotropy() {
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let c = isotropy_contraction(&g, &[0]).unwrap();
        assert!(c.validate().passed);
        assert!(c.basis_bracket(1, 2).is_empty());
        assert!(!c.basis_bracket(0, 1).is_empty());
        assert!(isotropy_contraction(&g, &[1]).is_err());
        let ab = LieAlgebra::abelian(3, 1);
        assert_eq!(isotropy_contraction(&ab, &[0]).unwrap().dim(), 3);
    }

    #[test]
    fn fixed_point_quasi_grading() {
        let th = involution(2);
        let q = quasi_from_fixedpoints(&th).unwrap();
        assert_eq!(q.dims(), vec![1, 2, 1]);
        assert!(validate_quasigrading(&q).pass);
        assert!(mixed_law_defect(&q).is_none());
        assert_eq!(quasi_from_fixedpoints(&involution(3)).unwrap().dims(), vec![3, 5, 3]);

        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let id = Automorphism::identity(Arc::new(g.clone()));
        let q = quasi_from_fixedpoints(&id).unwrap();
        assert_eq!(q.dims(), vec![3, 3]);
        let c = contract(&q).unwrap();
        // diagonal copy -> layer 0, second copy -> layer 1
        let t = takiff(&g, 2).unwrap();
        let map = Matrix::identity(6, 1);
        assert!(compare_structure(&t.algebra, &c, &map).unwrap());
    }

    #[test]
    fn tower_isomorphisms() {
        let th = involution(3);
        assert!(tower_vs_hat_fixed(&th, 2).unwrap().holds().unwrap());
        assert!(tower_vs_hat_fixed(&th, 3).unwrap().holds().unwrap());
        let gr = eigenspace_grading(&th).unwrap();
        assert!(tower_vs_cyclic_contraction(&gr).unwrap().holds().unwrap());
        assert!(tower_vs_copies_contraction(&th, 2).unwrap().holds().unwrap());
        assert!(tower_vs_fixedpoint_contraction(&th, 1).unwrap().holds().unwrap());
    }

    #[test]
    fn takiff_is_contraction_of_copies() {
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let id = Automorphism::identity(Arc::new(g.clone()));
        let cmp = tower_vs_copies_contraction(&id, 2).unwrap();
        assert!(cmp.holds().unwrap());
        // the tower for theta = id is g<2> with the same basis order
        let t = takiff(&g, 2).unwrap();
        let t2 = t.algebra.lift(2).unwrap();
        assert!(compare_structure(&t2, &cmp.source, &Matrix::identity(6, 2)).unwrap());
        let s = cyclic_shift(&g, 2).unwrap();
        assert_eq!(s.matrix(), extend_to_copies(&id, 2).unwrap().matrix());
    }
}
