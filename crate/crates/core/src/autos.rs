//! Periodic automorphisms and the gradings they define.
//!
//! Matrices act on coordinate columns: column `j` of an automorphism matrix is
//! the image of the `j`-th basis vector.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{copies, ClassicalKind, LieAlgebra};
use crate::linalg::{add_scaled, Matrix, Subspace, Vector};
use crate::scalars::{lcm, root_of_unity, Cyclotomic};

pub const DEFAULT_ORDER_CAP: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    algebra: Arc<LieAlgebra>,
    matrix: Matrix,
    order: usize,
}

/// Smallest `d` in `1..=cap` with `a^d = 1`.
pub fn matrix_order(a: &Matrix, cap: usize) -> Result<usize> {
    let mut p = a.clone();
    for d in 1..=cap {
        if p.is_identity() {
            return Ok(d);
        }
        p = p.mul(a)?;
    }
    Err(Error::OrderCapExceeded(cap))
}

/// First basis pair `(i, j)` with `A[e_i, e_j] != [A e_i, A e_j]`.
fn bracket_defect(g: &LieAlgebra, a: &Matrix) -> Option<(usize, usize)> {
    let d = g.dim();
    let cols: Vec<Vector> = (0..d).map(|j| a.column(j)).collect();
    for i in 0..d {
        for j in i + 1..d {
            let mut lhs = g.zero_vector();
            for (k, c) in g.basis_bracket(i, j) {
                add_scaled(&mut lhs, c, &cols[*k]);
            }
            let rhs = g.bracket(&cols[i], &cols[j]).expect("dimensions");
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

impl Automorphism {
    /// Checks invertibility and bracket preservation, and computes the order.
    pub fn new(g: Arc<LieAlgebra>, matrix: Matrix) -> Result<Self> {
        Self::with_cap(g, matrix, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(g: Arc<LieAlgebra>, matrix: Matrix, cap: usize) -> Result<Self> {
        let matrix = Self::conform(&g, matrix)?;
        if matrix.rank() != g.dim() {
            return Err(Error::Singular);
        }
        if let Some((i, j)) = bracket_defect(&g, &matrix) {
            return Err(Error::Construction(format!(
                "map does not preserve [e_{i}, e_{j}]"
            )));
        }
        let order = matrix_order(&matrix, cap)?;
        Ok(Automorphism {
            algebra: g,
            matrix,
            order,
        })
    }

    /// No checks at all; the declared order is taken on trust. Meant for
    /// exercising [`validate_automorphism`].
    pub fn unchecked(g: Arc<LieAlgebra>, matrix: Matrix, order: usize) -> Self {
        Automorphism {
            algebra: g,
            matrix,
            order,
        }
    }

    fn conform(g: &LieAlgebra, matrix: Matrix) -> Result<Matrix> {
        if matrix.rows() != g.dim() || matrix.cols() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                got: matrix.rows(),
            });
        }
        if matrix.conductor() != g.conductor() {
            return Err(Error::ConductorMismatch(g.conductor(), matrix.conductor()));
        }
        Ok(matrix)
    }

    pub fn identity(g: Arc<LieAlgebra>) -> Self {
        let matrix = Matrix::identity(g.dim(), g.conductor());
        Automorphism {
            algebra: g,
            matrix,
            order: 1,
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn conductor(&self) -> u32 {
        self.algebra.conductor()
    }

    pub fn apply(&self, x: &[Cyclotomic]) -> Result<Vector> {
        self.matrix.mul_vec(x)
    }

    /// The same automorphism over `Q(z_m)`.
    pub fn lift(&self, m: u32) -> Result<Self> {
        if m == self.conductor() {
            return Ok(self.clone());
        }
        Ok(Automorphism {
            algebra: Arc::new(self.algebra.lift(m)?),
            matrix: self.matrix.lift(m)?,
            order: self.order,
        })
    }

    /// Lifts to the smallest conductor containing the `order`-th roots of unity.
    pub fn lift_for_grading(&self) -> Result<Self> {
        self.lift(lcm(self.conductor(), self.order as u32))
    }

    /// Eigenvalue `c` with `theta(x) = z^c x` for the primitive `order`-th root `z`.
    pub fn eigen_exponent(&self, x: &[Cyclotomic]) -> Result<Option<usize>> {
        let k = self.order;
        let z = root_of_unity(k as u64, self.conductor())?;
        let tx = self.apply(x)?;
        let mut zc = Cyclotomic::one(self.conductor());
        for c in 0..k {
            let scaled: Vector = x.iter().map(|v| v * &zc).collect();
            if scaled == tx {
                return Ok(Some(c));
            }
            zc = &zc * &z;
        }
        Ok(None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismReport {
    pub passed: bool,
    pub invertible: bool,
    pub preserves_bracket: bool,
    /// First basis pair where the bracket is not preserved.
    pub failing_pair: Option<(usize, usize)>,
    pub declared_order: usize,
    pub computed_order: Option<usize>,
}

pub fn validate_automorphism(theta: &Automorphism) -> AutomorphismReport {
    let g = &theta.algebra;
    let invertible = theta.matrix.rank() == g.dim();
    let failing_pair = bracket_defect(g, &theta.matrix);
    let computed_order = if invertible {
        matrix_order(&theta.matrix, DEFAULT_ORDER_CAP.max(theta.order)).ok()
    } else {
        None
    };
    AutomorphismReport {
        passed: invertible && failing_pair.is_none() && computed_order == Some(theta.order),
        invertible,
        preserves_bracket: failing_pair.is_none(),
        failing_pair,
        declared_order: theta.order,
        computed_order,
    }
}

/// A `Z_k`-grading written in an adapted basis whose blocks are contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicGrading {
    pub algebra: LieAlgebra,
    pub k: usize,
    pub blocks: Vec<Vec<usize>>,
    /// Columns are the adapted basis vectors in the original coordinates.
    pub base_change: Matrix,
}

impl PeriodicGrading {
    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn block_of(&self, idx: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&idx))
            .expect("index in some block")
    }

    /// Block `i` as a subspace of the original algebra.
    pub fn component(&self, i: usize) -> Subspace {
        let cols: Vec<Vector> = self.blocks[i]
            .iter()
            .map(|&j| self.base_change.column(j))
            .collect();
        Subspace::span(&cols, self.base_change.rows(), self.base_change.conductor())
    }

    /// Columns of `base_change` spanning block `i`.
    pub fn component_basis(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = self.blocks[i]
            .iter()
            .map(|&j| self.base_change.column(j))
            .collect();
        Matrix::from_columns(&cols, self.base_change.rows(), self.base_change.conductor())
    }

    /// Original coordinates -> adapted coordinates.
    pub fn to_adapted(&self, x: &[Cyclotomic]) -> Result<Vector> {
        self.base_change.inverse()?.mul_vec(x)
    }

    /// First basis pair violating `[block_i, block_j] ⊆ block_{i+j mod k}`.
    pub fn closure_defect(&self) -> Option<(usize, usize)> {
        let tag: Vec<usize> = (0..self.algebra.dim()).map(|j| self.block_of(j)).collect();
        for (i, j, row) in self.algebra.brackets() {
            let target = (tag[i] + tag[j]) % self.k;
            if row.iter().any(|(s, _)| tag[*s] != target) {
                return Some((i, j));
            }
        }
        None
    }
}

#[derive(Serialize, Deserialize)]
struct GradingJson {
    k: usize,
    blocks: Vec<Vec<usize>>,
    base_change: Matrix,
}

impl Serialize for PeriodicGrading {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GradingJson {
            k: self.k,
            blocks: self.blocks.clone(),
            base_change: self.base_change.clone(),
        }
        .serialize(s)
    }
}

impl PeriodicGrading {
    /// Rebuilds a grading from its JSON form over the original algebra.
    pub fn from_json(g: &LieAlgebra, v: serde_json::Value) -> Result<Self> {
        let j: GradingJson = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        let labels = adapted_labels(&j.blocks);
        let mut algebra = g.change_basis(&j.base_change, labels)?;
        algebra = algebra.with_tags(Some(block_tags(&j.blocks, g.dim())))?;
        let out = PeriodicGrading {
            algebra,
            k: j.k,
            blocks: j.blocks,
            base_change: j.base_change,
        };
        if let Some((a, b)) = out.closure_defect() {
            return Err(Error::Invalid(format!("grading closure fails at ({a}, {b})")));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct AutomorphismJson {
    matrix: Matrix,
    order: usize,
}

impl Serialize for Automorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AutomorphismJson {
            matrix: self.matrix.clone(),
            order: self.order,
        }
        .serialize(s)
    }
}

impl Automorphism {
    /// Parses `{"matrix", "order"}` and revalidates against `g`.
    pub fn from_json(g: Arc<LieAlgebra>, v: serde_json::Value) -> Result<Self> {
        let j: AutomorphismJson =
            serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        let theta = Self::new(g, j.matrix)?;
        if theta.order != j.order {
            return Err(Error::Invalid(format!(
                "declared order {} but computed {}",
                j.order, theta.order
            )));
        }
        Ok(theta)
    }
}

fn adapted_labels(blocks: &[Vec<usize>]) -> Vec<String> {
    let mut labels = vec![String::new(); blocks.iter().map(|b| b.len()).sum()];
    for (i, b) in blocks.iter().enumerate() {
        for (r, &j) in b.iter().enumerate() {
            labels[j] = format!("g{i}.{r}");
        }
    }
    labels
}

fn block_tags(blocks: &[Vec<usize>], dim: usize) -> Vec<usize> {
    let mut tags = vec![0; dim];
    for (i, b) in blocks.iter().enumerate() {
        for &j in b {
            tags[j] = i;
        }
    }
    tags
}

/// Eigenspace decomposition `g = ⊕ g_i`, `g_i = ker(theta - z^i)`.
pub fn eigenspace_grading(theta: &Automorphism) -> Result<PeriodicGrading> {
    let g = &theta.algebra;
    let n = g.conductor();
    let k = theta.order;
    let z = root_of_unity(k as u64, n)?;
    let d = g.dim();
    let mut cols = Vec::with_capacity(d);
    let mut blocks = Vec::with_capacity(k);
    let mut zi = Cyclotomic::one(n);
    for _ in 0..k {
        let shifted = theta.matrix.sub(&Matrix::identity(d, n).scale(&zi));
        let ns = shifted.nullspace();
        blocks.push((cols.len()..cols.len() + ns.len()).collect::<Vec<_>>());
        cols.extend(ns);
        zi = &zi * &z;
    }
    if cols.len() != d {
        return Err(Error::Construction("automorphism is not diagonalizable".into()));
    }
    let base_change = Matrix::from_columns(&cols, d, n);
    let algebra = g
        .change_basis(&base_change, adapted_labels(&blocks))?
        .with_tags(Some(block_tags(&blocks, d)))?;
    let out = PeriodicGrading {
        algebra,
        k,
        blocks,
        base_change,
    };
    if let Some((a, b)) = out.closure_defect() {
        return Err(Error::Construction(format!(
            "eigenspaces violate the grading law at ({a}, {b})"
        )));
    }
    Ok(out)
}

/// The fixed-point subalgebra together with its inclusion (columns in the
/// original coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSubalgebra {
    pub algebra: LieAlgebra,
    pub inclusion: Matrix,
}

pub fn fixed_subalgebra(theta: &Automorphism) -> Result<FixedSubalgebra> {
    let g = &theta.algebra;
    let d = g.dim();
    let n = g.conductor();
    let cols = theta.matrix.sub(&Matrix::identity(d, n)).nullspace();
    let inclusion = Matrix::from_columns(&cols, d, n);
    let labels = (0..cols.len()).map(|r| format!("g0.{r}")).collect();
    let mut algebra = g.restrict_to(&inclusion, labels)?;
    if cols.len() == d {
        algebra = algebra.with_rank(g.rank());
    }
    Ok(FixedSubalgebra { algebra, inclusion })
}

/// Builds the automorphism of a matrix-realized algebra induced by a map on
/// matrices, failing if some image leaves the algebra.
fn from_matrix_map(g: Arc<LieAlgebra>, f: impl Fn(&Matrix) -> Matrix) -> Result<Automorphism> {
    let real = g.realization().ok_or(Error::NotRealized)?;
    let d = g.dim();
    let mut cols = Vec::with_capacity(d);
    for b in real.basis() {
        let img = f(b);
        cols.push(
            real.coords(&img)
                .ok_or_else(|| Error::Construction("image leaves the algebra".into()))?,
        );
    }
    let m = Matrix::from_columns(&cols, d, g.conductor());
    Automorphism::new(g, m)
}

/// `Ad(A)` for the torus element `A = diag(z^{w_1}, ..., z^{w_s})`, `z` a
/// primitive `k`-th root of unity. The algebra is lifted to a conductor
/// containing `z`. Works for any realization normalized by `A` (all of `gl`
/// and `sl`, and `sp` when `A` is conformally symplectic).
pub fn inner_from_torus(g: &LieAlgebra, weights: &[i64], k: usize) -> Result<Automorphism> {
    let real = g.realization().ok_or(Error::NotRealized)?;
    if weights.len() != real.size() {
        return Err(Error::DimensionMismatch {
            expected: real.size(),
            got: weights.len(),
        });
    }
    if k == 0 {
        return Err(Error::Invalid("torus order must be positive".into()));
    }
    let n = lcm(g.conductor(), k as u32);
    let g = Arc::new(g.lift(n)?);
    let step = (n as usize / k) as i64;
    let w: Vec<i64> = weights.to_vec();
    from_matrix_map(g, move |b| {
        let s = b.rows();
        let mut out = Matrix::zeros(s, s, n);
        for r in 0..s {
            for c in 0..s {
                let v = b.get(r, c);
                if !v.is_zero() {
                    out.set(r, c, v * &Cyclotomic::zeta_pow(n, (w[r] - w[c]) * step));
                }
            }
        }
        out
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvolutionVariant {
    NegTranspose,
    NegSymplTranspose,
    ConjByReflection,
}

impl std::str::FromStr for InvolutionVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "neg_transpose" => Ok(Self::NegTranspose),
            "neg_sympl_transpose" => Ok(Self::NegSymplTranspose),
            "conj_by_reflection" => Ok(Self::ConjByReflection),
            _ => Err(Error::Parse(format!("unknown involution variant {s:?}"))),
        }
    }
}

fn standard_j(size: usize, n: u32) -> Matrix {
    let m = size / 2;
    let mut j = Matrix::zeros(size, size, n);
    for i in 0..m {
        j.set(i, m + i, Cyclotomic::one(n));
        j.set(m + i, i, Cyclotomic::from_int(-1, n));
    }
    j
}

pub fn outer_involution(g: &LieAlgebra, variant: InvolutionVariant) -> Result<Automorphism> {
    let real = g.realization().ok_or(Error::NotRealized)?;
    let kind = real.kind();
    let size = real.size();
    let n = g.conductor();
    let g = Arc::new(g.clone());
    let bad = || {
        Err(Error::IncompatibleVariant(format!(
            "{variant:?} on {kind:?}_{size}"
        )))
    };
    match variant {
        InvolutionVariant::NegTranspose => {
            if !matches!(kind, ClassicalKind::Sl | ClassicalKind::Gl) {
                return bad();
            }
            let minus = Cyclotomic::from_int(-1, n);
            from_matrix_map(g, |b| b.transpose().scale(&minus))
        }
        InvolutionVariant::NegSymplTranspose => {
            if !matches!(kind, ClassicalKind::Sl | ClassicalKind::Gl) || size % 2 != 0 {
                return bad();
            }
            let j = standard_j(size, n);
            let j_inv = j.inverse()?;
            let minus = Cyclotomic::from_int(-1, n);
            from_matrix_map(g, |b| {
                j.mul(&b.transpose())
                    .and_then(|x| x.mul(&j_inv))
                    .expect("square")
                    .scale(&minus)
            })
        }
        InvolutionVariant::ConjByReflection => {
            if kind != ClassicalKind::So {
                return bad();
            }
            let mut s = Matrix::identity(size, n);
            s.set(size - 1, size - 1, Cyclotomic::from_int(-1, n));
            from_matrix_map(g, |b| s.mul(b).and_then(|x| x.mul(&s)).expect("square"))
        }
    }
}

/// Offsets of the parts of an algebra tagged by part index, after checking
/// that the parts are `n` identical copies.
fn copy_structure(nq: &LieAlgebra) -> Result<(usize, usize)> {
    let tags = nq
        .tags()
        .ok_or_else(|| Error::MissingTags("algebra has no part tags".into()))?;
    let n = tags.iter().copied().max().map_or(0, |m| m + 1);
    if n == 0 || !nq.dim().is_multiple_of(n) {
        return Err(Error::MissingTags("parts of unequal size".into()));
    }
    let d = nq.dim() / n;
    for (idx, &t) in tags.iter().enumerate() {
        if t != idx / d {
            return Err(Error::MissingTags("parts are not contiguous".into()));
        }
    }
    for p in 1..n {
        for i in 0..d {
            for j in 0..d {
                let a = nq.basis_bracket(i, j);
                let b = nq.basis_bracket(p * d + i, p * d + j);
                let shifted: Vec<(usize, Cyclotomic)> =
                    a.iter().map(|(k, c)| (k + p * d, c.clone())).collect();
                if &shifted != b {
                    return Err(Error::MissingTags(format!("part {p} differs from part 0")));
                }
            }
        }
    }
    Ok((n, d))
}

/// `(a_1, ..., a_n) -> (a_2, ..., a_n, theta a_1)` on the matrix level, with
/// `theta` given as a `d x d` matrix.
fn shift_matrix(theta: &Matrix, parts: usize) -> Matrix {
    let d = theta.rows();
    let n = theta.conductor();
    let mut m = Matrix::zeros(d * parts, d * parts, n);
    for p in 0..parts {
        for j in 0..d {
            let col = p * d + j;
            if p == 0 {
                let tgt = (parts - 1) * d;
                for i in 0..d {
                    m.set(tgt + i, col, theta.get(i, j).clone());
                }
            } else {
                m.set((p - 1) * d + j, col, Cyclotomic::one(n));
            }
        }
    }
    m
}

/// The cyclic permutation of the summands of `n·g`.
pub fn cyclic_shift(g: &LieAlgebra, n: usize) -> Result<Automorphism> {
    if n == 0 {
        return Err(Error::Invalid("number of copies must be positive".into()));
    }
    cyclic_shift_on(&copies(g, n)?)
}

/// The cyclic permutation on a pre-built `n·g` carrying part tags.
pub fn cyclic_shift_on(nq: &LieAlgebra) -> Result<Automorphism> {
    let (n, d) = copy_structure(nq)?;
    let m = shift_matrix(&Matrix::identity(d, nq.conductor()), n);
    Automorphism::new(Arc::new(nq.clone()), m)
}

/// `theta~` on `n·q`: cyclic shift twisted by `theta` on the wrap-around part.
pub fn extend_to_copies(theta: &Automorphism, n: usize) -> Result<Automorphism> {
    if n == 0 {
        return Err(Error::Invalid("number of copies must be positive".into()));
    }
    if n == 1 {
        return Ok(theta.clone());
    }
    let nq = copies(&theta.algebra, n)?;
    let m = shift_matrix(&theta.matrix, n);
    Automorphism::new(Arc::new(nq), m)
}

/// Eigenvector `(x, mu^j x, ..., mu^{(n-1)j} x)` of `theta~` inside `n·q`,
/// where `mu` is the primitive `nk`-th root with `mu^n = z_k`. If `x` lies in
/// `q_{j mod k}` it has eigenvalue `mu^j`.
pub fn vandermonde_vector(x: &[Cyclotomic], n: usize, k: usize, j: usize, conductor: u32) -> Result<Vector> {
    let mu = root_of_unity((n * k) as u64, conductor)?;
    let muj = mu.pow(j as i64)?;
    let mut out = Vec::with_capacity(x.len() * n);
    let mut f = Cyclotomic::one(conductor);
    for _ in 0..n {
        out.extend(x.iter().map(|v| v * &f));
        f = &f * &muj;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{compare_structure, construct_classical, ClassicalKind};

    fn grade(th: &Automorphism) -> PeriodicGrading {
        eigenspace_grading(&th.lift_for_grading().unwrap()).unwrap()
    }

    fn sl(n: usize) -> LieAlgebra {
        construct_classical(ClassicalKind::Sl, n).unwrap()
    }

    #[test]
    fn identity_and_neg_transpose() {
        let g = Arc::new(sl(3));
        let id = Automorphism::identity(g.clone());
        let r = validate_automorphism(&id);
        assert!(r.passed);
        assert_eq!(r.computed_order, Some(1));
        let th = outer_involution(&g, InvolutionVariant::NegTranspose).unwrap();
        assert_eq!(th.order(), 2);
        assert!(validate_automorphism(&th).passed);
        assert!(matches!(
            eigenspace_grading(&th),
            Err(Error::ConductorTooSmall { .. })
        ));
        let gr = grade(&th);
        assert_eq!(gr.dims(), vec![3, 5]);
        assert!(gr.algebra.validate().passed);
    }

    #[test]
    fn scaling_is_rejected() {
        let g = Arc::new(sl(2));
        let two = Matrix::identity(3, 1).scale(&Cyclotomic::from_int(2, 1));
        assert!(Automorphism::new(g.clone(), two.clone()).is_err());
        let fake = Automorphism::unchecked(g, two, 1);
        let r = validate_automorphism(&fake);
        assert!(!r.passed && !r.preserves_bracket);
        assert_eq!(r.computed_order, None);
    }

    #[test]
    fn torus_examples() {
        let gl4 = construct_classical(ClassicalKind::Gl, 4).unwrap();
        let th = inner_from_torus(&gl4, &[0, 0, 1, 1], 2).unwrap();
        assert_eq!(grade(&th).dims(), vec![8, 8]);
        let gl3 = construct_classical(ClassicalKind::Gl, 3).unwrap();
        let th = inner_from_torus(&gl3, &[0, 1, 2], 3).unwrap();
        assert_eq!(th.order(), 3);
        assert_eq!(grade(&th).dims(), vec![3, 3, 3]);
        let th = inner_from_torus(&gl3, &[0, 0, 0], 3).unwrap();
        assert_eq!(th.order(), 1);
    }

    #[test]
    fn sp4_order_four() {
        let sp4 = construct_classical(ClassicalKind::Sp, 4).unwrap();
        let th = inner_from_torus(&sp4, &[1, 0, 2, 3], 4).unwrap();
        assert_eq!(th.order(), 4);
        let gr = grade(&th);
        assert_eq!(gr.dims(), vec![2, 3, 2, 3]);
        let g0 = fixed_subalgebra(&th).unwrap();
        assert_eq!(g0.algebra.dim(), 2);
        assert!(g0.algebra.is_abelian());
        // a torus element that is not conformally symplectic leaves sp4
        assert!(inner_from_torus(&sp4, &[1, 0, 0, 0], 4).is_err());
    }

    #[test]
    fn involution_variants() {
        let th = outer_involution(&sl(4), InvolutionVariant::NegSymplTranspose).unwrap();
        assert_eq!(grade(&th).dims(), vec![10, 5]);
        let so4 = construct_classical(ClassicalKind::So, 4).unwrap();
        let th = outer_involution(&so4, InvolutionVariant::ConjByReflection).unwrap();
        assert_eq!(grade(&th).dims(), vec![3, 3]);
        assert!(outer_involution(&so4, InvolutionVariant::NegTranspose).is_err());
        assert!(outer_involution(&sl(3), InvolutionVariant::NegSymplTranspose).is_err());
    }

    #[test]
    fn fixed_algebra_of_neg_transpose_is_so3() {
        let th = outer_involution(&sl(3), InvolutionVariant::NegTranspose).unwrap();
        let f = fixed_subalgebra(&th).unwrap();
        let so3 = construct_classical(ClassicalKind::So, 3).unwrap();
        // the fixed vectors are E_ij - E_ji; match them with so3's F_ij
        let real = th.algebra().realization().unwrap();
        let cols: Vec<Vector> = (0..3)
            .map(|c| {
                let m = real.matrix_of(&f.inclusion.column(c));
                so3.realization().unwrap().coords(&m).unwrap()
            })
            .collect();
        let map = Matrix::from_columns(&cols, 3, 1);
        assert!(compare_structure(&f.algebra, &so3, &map).unwrap());
    }

    #[test]
    fn cyclic_shifts() {
        let g = sl(2);
        assert_eq!(cyclic_shift(&g, 1).unwrap().order(), 1);
        let s = cyclic_shift(&g, 2).unwrap();
        assert_eq!(grade(&s).dims(), vec![3, 3]);
        let gl1 = construct_classical(ClassicalKind::Gl, 1).unwrap();
        let s = cyclic_shift(&gl1, 3).unwrap().lift_for_grading().unwrap();
        assert_eq!(grade(&s).dims(), vec![1, 1, 1]);
        assert!(cyclic_shift_on(&g).is_err());
    }

    #[test]
    fn extension_to_copies() {
        let th = outer_involution(&sl(3), InvolutionVariant::NegTranspose).unwrap();
        assert_eq!(extend_to_copies(&th, 1).unwrap(), th);
        let id = Automorphism::identity(Arc::new(sl(2)));
        assert_eq!(
            extend_to_copies(&id, 2).unwrap().matrix(),
            cyclic_shift(&sl(2), 2).unwrap().matrix()
        );
        let t2 = extend_to_copies(&th, 2).unwrap().lift_for_grading().unwrap();
        assert_eq!(t2.order(), 4);
        let gr = grade(&t2);
        assert_eq!(gr.dims(), vec![3, 5, 3, 5]);
        // Vandermonde eigenvectors
        let base = grade(&th);
        for j in 0..4 {
            let comp = base.component(j % 2);
            for x in comp.basis() {
                let xl: Vector = x.iter().map(|c| c.lift(4).unwrap()).collect();
                let v = vandermonde_vector(&xl, 2, 2, j, 4).unwrap();
                assert_eq!(t2.eigen_exponent(&v).unwrap(), Some(j));
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let th = outer_involution(&sl(3), InvolutionVariant::NegTranspose).unwrap();
        let v = serde_json::to_value(&th).unwrap();
        let back = Automorphism::from_json(th.algebra().clone(), v).unwrap();
        assert_eq!(back, th);
        let th = th.lift_for_grading().unwrap();
        let gr = eigenspace_grading(&th).unwrap();
        let v = serde_json::to_value(&gr).unwrap();
        assert_eq!(PeriodicGrading::from_json(th.algebra(), v).unwrap(), gr);
    }
}
