//! Lie algebras given by structure constants.
//!
//! Brackets are stored as a full `dim x dim` table of sparse vectors, filled
//! antisymmetrically from the `i < j` entries supplied at construction, so
//! antisymmetry holds by storage convention.

mod analysis;
mod classical;
mod forms;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, zero_vector, Matrix, SparseRow, Vector};
use crate::scalars::{lcm, Cyclotomic};

pub use analysis::{centralizer, element_type, is_regular, minimal_polynomial, ElementType};
pub use classical::{construct_classical, coxeter_number, ClassicalKind, Realization};
pub use forms::{invariant_form, BilinearForm, FormSource};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    conductor: u32,
    labels: Vec<String>,
    tags: Option<Vec<usize>>,
    table: Vec<SparseRow>,
    rank: Option<usize>,
    realization: Option<Arc<Realization>>,
}

/// Outcome of the exhaustive structural check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub antisymmetric: bool,
    /// First basis triple `(i, j, k)` violating the Jacobi identity.
    pub failing_triple: Option<(usize, usize, usize)>,
}

impl LieAlgebra {
    /// Builds an algebra from entries `(i, j, k, c)` meaning `[e_i, e_j] += c e_k`.
    ///
    /// Entries with `i > j` are stored negated at `(j, i)`; `i == j` is rejected.
    pub fn from_structure_constants(
        dim: usize,
        conductor: u32,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Cyclotomic)>,
    ) -> Result<Self> {
        if labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: labels.len(),
            });
        }
        let mut acc: BTreeMap<(usize, usize), BTreeMap<usize, Cyclotomic>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Construction(format!(
                    "index out of range in ({i}, {j}, {k})"
                )));
            }
            if c.conductor() != conductor {
                return Err(Error::ConductorMismatch(conductor, c.conductor()));
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::Construction(format!("nonzero [e_{i}, e_{i}]")));
            }
            let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
            let slot = acc
                .entry((a, b))
                .or_default()
                .entry(k)
                .or_insert_with(|| Cyclotomic::zero(conductor));
            *slot += &c;
        }
        let mut table = vec![Vec::new(); dim * dim];
        for ((i, j), terms) in acc {
            let row: SparseRow = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if row.is_empty() {
                continue;
            }
            table[j * dim + i] = row.iter().map(|(k, c)| (*k, -c)).collect();
            table[i * dim + j] = row;
        }
        Ok(LieAlgebra {
            dim,
            conductor,
            labels,
            tags: None,
            table,
            rank: None,
            realization: None,
        })
    }

    pub fn abelian(dim: usize, conductor: u32) -> Self {
        let labels = (0..dim).map(|i| format!("a{i}")).collect();
        Self::from_structure_constants(dim, conductor, labels, std::iter::empty())
            .expect("abelian algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tags(&self) -> Option<&[usize]> {
        self.tags.as_deref()
    }

    pub fn with_tags(mut self, tags: Option<Vec<usize>>) -> Result<Self> {
        if let Some(t) = &tags {
            if t.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: t.len(),
                });
            }
        }
        self.tags = tags;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// Rank supplied by a constructor (classical series, direct sums of them).
    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    pub fn with_rank(mut self, rank: Option<usize>) -> Self {
        self.rank = rank;
        self
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_deref()
    }

    pub(crate) fn set_realization(&mut self, r: Realization) {
        self.realization = Some(Arc::new(r));
    }

    /// Sparse `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseRow {
        &self.table[i * self.dim + j]
    }

    /// Structure constants with `i < j`, lexicographic in `(i, j)` then `k`.
    pub fn brackets(&self) -> Vec<(usize, usize, &SparseRow)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let row = self.basis_bracket(i, j);
                if !row.is_empty() {
                    out.push((i, j, row));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|r| r.is_empty())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::linalg::unit_vector(self.dim, i, self.conductor)
    }

    pub fn zero_vector(&self) -> Vector {
        zero_vector(self.dim, self.conductor)
    }

    pub fn bracket(&self, x: &[Cyclotomic], y: &[Cyclotomic]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let row = self.basis_bracket(i, j);
                if row.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in row {
                    out[*k] += &(&c * s);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x`; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Cyclotomic]) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = Matrix::zeros(self.dim, self.dim, self.conductor);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.basis_bracket(i, j) {
                    let v = m.get(*k, j) + &(xi * c);
                    m.set(*k, j, v);
                }
            }
        }
        Ok(m)
    }

    fn sparse_bracket_with_basis(&self, i: usize, v: &SparseRow, out: &mut [Cyclotomic]) {
        for (j, c) in v {
            for (k, s) in self.basis_bracket(i, *j) {
                out[*k] += &(c * s);
            }
        }
    }

    /// Exhaustive antisymmetry and Jacobi check on all basis triples.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim;
        let mut antisymmetric = true;
        'outer: for i in 0..d {
            if !self.basis_bracket(i, i).is_empty() {
                antisymmetric = false;
                break;
            }
            for j in i + 1..d {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                let neg: SparseRow = b.iter().map(|(k, c)| (*k, -c)).collect();
                if *a != neg {
                    antisymmetric = false;
                    break 'outer;
                }
            }
        }
        let mut buf = self.zero_vector();
        let mut failing = None;
        'jac: for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    self.sparse_bracket_with_basis(i, self.basis_bracket(j, k), &mut buf);
                    self.sparse_bracket_with_basis(j, self.basis_bracket(k, i), &mut buf);
                    self.sparse_bracket_with_basis(k, self.basis_bracket(i, j), &mut buf);
                    if buf.iter().any(|x| !x.is_zero()) {
                        failing = Some((i, j, k));
                        break 'jac;
                    }
                }
            }
        }
        ValidationReport {
            passed: antisymmetric && failing.is_none(),
            antisymmetric,
            failing_triple: failing,
        }
    }

    /// Copy with one structure constant `[e_i, e_j]_k` shifted by `delta` (fault injection).
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: Cyclotomic) -> Result<Self> {
        let mut entries = self.entries();
        entries.push((i, j, k, delta));
        let mut out = Self::from_structure_constants(
            self.dim,
            self.conductor,
            self.labels.clone(),
            entries,
        )?;
        out.tags = self.tags.clone();
        out.rank = self.rank;
        Ok(out)
    }

    fn entries(&self) -> Vec<(usize, usize, usize, Cyclotomic)> {
        self.brackets()
            .into_iter()
            .flat_map(|(i, j, row)| row.iter().map(move |(k, c)| (i, j, *k, c.clone())))
            .collect()
    }

    /// The same algebra over a larger field `Q(z_M)`.
    pub fn lift(&self, m: u32) -> Result<Self> {
        if m == self.conductor {
            return Ok(self.clone());
        }
        let entries = self
            .entries()
            .into_iter()
            .map(|(i, j, k, c)| Ok((i, j, k, c.lift(m)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Self::from_structure_constants(self.dim, m, self.labels.clone(), entries)?;
        out.tags = self.tags.clone();
        out.rank = self.rank;
        out.realization = match &self.realization {
            Some(r) => Some(Arc::new(r.lift(m)?)),
            None => None,
        };
        Ok(out)
    }

    /// Rewrites the algebra in a new basis; columns of `basis` are the new
    /// basis vectors in old coordinates.
    pub fn change_basis(&self, basis: &Matrix, labels: Vec<String>) -> Result<Self> {
        let d = self.dim;
        if basis.rows() != d || basis.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: basis.cols(),
            });
        }
        let inv = basis.inverse()?;
        let cols: Vec<Vector> = (0..d).map(|j| basis.column(j)).collect();
        let mut entries = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let br = self.bracket(&cols[a], &cols[b])?;
                let coords = inv.mul_vec(&br)?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((a, b, k, c));
                    }
                }
            }
        }
        let mut out = Self::from_structure_constants(d, self.conductor, labels, entries)?;
        out.rank = self.rank;
        Ok(out)
    }

    /// Restriction of the bracket to the span of `basis` (columns of a `dim x r`
    /// matrix), which must be closed under the bracket.
    pub fn restrict_to(&self, basis: &Matrix, labels: Vec<String>) -> Result<Self> {
        let r = basis.cols();
        let cols: Vec<Vector> = (0..r).map(|j| basis.column(j)).collect();
        let sub = crate::linalg::Subspace::span(&cols, self.dim, self.conductor);
        if sub.dim() != r {
            return Err(Error::Construction("restriction basis is dependent".into()));
        }
        // coordinates w.r.t. the given columns, via the echelon basis
        let to_echelon = Matrix::from_columns(
            &cols.iter().map(|c| sub.coords(c).unwrap()).collect::<Vec<_>>(),
            r,
            self.conductor,
        );
        let from_echelon = to_echelon.inverse()?;
        let mut entries = Vec::new();
        for a in 0..r {
            for b in a + 1..r {
                let br = self.bracket(&cols[a], &cols[b])?;
                let ec = sub.coords(&br).ok_or_else(|| {
                    Error::NotSubalgebra(format!("bracket of columns {a},{b} leaves the span"))
                })?;
                let coords = from_echelon.mul_vec(&ec)?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((a, b, k, c));
                    }
                }
            }
        }
        let labels = if labels.is_empty() { (0..r).map(|i| format!("f{i}")).collect() } else { labels };
        Self::from_structure_constants(r, self.conductor, labels, entries)
    }
}

/// Block-diagonal direct sum; tags record the part index.
pub fn direct_sum(parts: &[&LieAlgebra]) -> Result<LieAlgebra> {
    let n = parts.iter().fold(1, |acc, p| lcm(acc, p.conductor()));
    let mut labels = Vec::new();
    let mut tags = Vec::new();
    let mut entries = Vec::new();
    let mut offset = 0;
    let single = parts.len() == 1;
    for (pi, p) in parts.iter().enumerate() {
        let p = p.lift(n)?;
        for l in p.labels() {
            labels.push(if single { l.clone() } else { format!("{l}#{pi}") });
        }
        tags.extend(std::iter::repeat_n(pi, p.dim()));
        for (i, j, k, c) in p.entries() {
            entries.push((i + offset, j + offset, k + offset, c));
        }
        offset += p.dim();
    }
    if single {
        return Ok(parts[0].lift(n)?.clone());
    }
    let rank = parts
        .iter()
        .map(|p| p.rank())
        .try_fold(0, |acc, r| r.map(|r| acc + r));
    let out = LieAlgebra::from_structure_constants(offset, n, labels, entries)?;
    Ok(out.with_tags(Some(tags))?.with_rank(rank))
}

/// `n` copies of `g`.
pub fn copies(g: &LieAlgebra, n: usize) -> Result<LieAlgebra> {
    let parts: Vec<&LieAlgebra> = std::iter::repeat_n(g, n).collect();
    if n == 1 {
        // keep part tags even for a single summand
        let all = vec![0; g.dim()];
        return g.clone().with_tags(Some(all));
    }
    direct_sum(&parts)
}

/// True iff `basis_map` (columns = images of `a`'s basis in `b`'s coordinates)
/// is invertible and intertwines the two brackets.
pub fn compare_structure(a: &LieAlgebra, b: &LieAlgebra, basis_map: &Matrix) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if basis_map.rows() != b.dim() || basis_map.cols() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: basis_map.cols(),
        });
    }
    if basis_map.rank() != a.dim() {
        return Ok(false);
    }
    let images: Vec<Vector> = (0..a.dim()).map(|j| basis_map.column(j)).collect();
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            let mut lhs = b.zero_vector();
            for (k, c) in a.basis_bracket(i, j) {
                add_scaled(&mut lhs, c, &images[*k]);
            }
            let rhs = b.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
struct LieAlgebraJson {
    dim: usize,
    #[serde(rename = "N")]
    n: u32,
    labels: Vec<String>,
    brackets: Vec<(usize, usize, Vec<(usize, Cyclotomic)>)>,
    tags: Option<Vec<usize>>,
}

impl Serialize for LieAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LieAlgebraJson {
            dim: self.dim,
            n: self.conductor,
            labels: self.labels.clone(),
            brackets: self
                .brackets()
                .into_iter()
                .map(|(i, j, row)| (i, j, row.clone()))
                .collect(),
            tags: self.tags.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LieAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = LieAlgebraJson::deserialize(d)?;
        for (i, k, _) in &j.brackets {
            if i >= k {
                return Err(serde::de::Error::custom("bracket entries need i < j"));
            }
        }
        let entries = j
            .brackets
            .into_iter()
            .flat_map(|(i, k, row)| row.into_iter().map(move |(l, c)| (i, k, l, c)));
        LieAlgebra::from_structure_constants(j.dim, j.n, j.labels, entries)
            .and_then(|g| g.with_tags(j.tags))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> LieAlgebra {
        construct_classical(ClassicalKind::Sl, 2).unwrap()
    }

    #[test]
    fn sl2_relations() {
        let g = sl2();
        assert_eq!(g.dim(), 3);
        let (h, e, f) = (g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
        let two = |v: &Vector| v.iter().map(|x| x + x).collect::<Vector>();
        assert_eq!(g.bracket(&h, &e).unwrap(), two(&e));
        assert_eq!(g.bracket(&h, &f).unwrap(), two(&f).iter().map(|x| -x).collect::<Vector>());
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        assert_eq!(g.bracket(&e, &e).unwrap(), g.zero_vector());
        assert!(g.bracket(&h, &h[..2]).is_err());
    }

    #[test]
    fn gl2_commutator() {
        let g = construct_classical(ClassicalKind::Gl, 2).unwrap();
        // E11, E12, E21, E22
        let br = g.bracket(&g.basis_vector(0), &g.basis_vector(1)).unwrap();
        assert_eq!(br, g.basis_vector(1));
    }

    #[test]
    fn direct_sums() {
        let g = sl2();
        let s = direct_sum(&[&g, &g]).unwrap();
        assert_eq!(s.dim(), 6);
        assert_eq!(s.tags().unwrap(), &[0, 0, 0, 1, 1, 1]);
        assert!(s.basis_bracket(1, 5).is_empty());
        assert!(s.validate().passed);
        assert_eq!(s.rank(), Some(2));
        assert_eq!(direct_sum(&[&g]).unwrap(), g);
        let gl1 = construct_classical(ClassicalKind::Gl, 1).unwrap();
        let a = direct_sum(&[&gl1, &gl1, &gl1]).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.is_abelian());
    }

    #[test]
    fn validate_detects_fault() {
        let g = construct_classical(ClassicalKind::Sl, 3).unwrap();
        assert!(g.validate().passed);
        let bad = g.perturbed(0, 2, 3, Cyclotomic::one(1)).unwrap();
        let rep = bad.validate();
        assert!(!rep.passed);
        assert!(rep.failing_triple.is_some());
    }

    #[test]
    fn json_roundtrip() {
        let g = sl2();
        let s = serde_json::to_string(&g).unwrap();
        let h: LieAlgebra = serde_json::from_str(&s).unwrap();
        assert_eq!(h.dim(), 3);
        assert!(compare_structure(&g, &h, &Matrix::identity(3, 1)).unwrap());
        assert!(serde_json::from_str::<LieAlgebra>(
            r#"{"dim":2,"N":1,"labels":["a","b"],"brackets":[[1,0,[]]],"tags":null}"#
        )
        .is_err());
    }

    #[test]
    fn so3_is_sl2_over_gaussian_rationals() {
        // so3 with the identity form is the compact form, so the isomorphism
        // with sl2 needs i. Target relations from the so3 table:
        // [F12,F13] = -F23, [F12,F23] = F13, [F13,F23] = -F12.
        // Solving in sl2 gives F12 -> (i/2)h, F13 -> (e-f)/2, F23 -> -(i/2)(e+f).
        let so3 = construct_classical(ClassicalKind::So, 3).unwrap().lift(4).unwrap();
        let g = sl2().lift(4).unwrap();
        let i = crate::scalars::primitive_root(4).unwrap();
        let half = crate::scalars::rational(1, 2);
        let z = Cyclotomic::zero(4);
        let h2 = Cyclotomic::one(4).scale(&half);
        let ih2 = i.scale(&half);
        let a = vec![ih2.clone(), z.clone(), z.clone()];
        let b = vec![z.clone(), h2.clone(), -&h2];
        let c = vec![z.clone(), -&ih2, -&ih2];
        let map = Matrix::from_columns(&[a, b, c], 3, 4);
        assert!(compare_structure(&so3, &g, &map).unwrap());
        assert!(!compare_structure(&so3, &g, &Matrix::identity(3, 4)).unwrap());
    }
}
