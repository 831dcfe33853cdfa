//! Dense and sparse exact linear algebra over a cyclotomic field.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::Cyclotomic;

pub type Vector = Vec<Cyclotomic>;

pub fn zero_vector(len: usize, n: u32) -> Vector {
    vec![Cyclotomic::zero(n); len]
}

pub fn unit_vector(len: usize, i: usize, n: u32) -> Vector {
    let mut v = zero_vector(len, n);
    v[i] = Cyclotomic::one(n);
    v
}

pub fn is_zero_vector(v: &[Cyclotomic]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_scaled(acc: &mut [Cyclotomic], c: &Cyclotomic, v: &[Cyclotomic]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn lift_vector(v: &[Cyclotomic], m: u32) -> Result<Vector> {
    v.iter().map(|x| x.lift(m)).collect()
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    conductor: u32,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, n: u32) -> Self {
        Matrix {
            rows,
            cols,
            conductor: n,
            data: vec![Cyclotomic::zero(n); rows * cols],
        }
    }

    pub fn identity(d: usize, n: u32) -> Self {
        let mut m = Self::zeros(d, d, n);
        for i in 0..d {
            m.set(i, i, Cyclotomic::one(n));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, n: u32) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            conductor: n,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector], rows: usize, n: u32) -> Self {
        let mut m = Self::zeros(rows, cols.len(), n);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<i64>], n: u32) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| Cyclotomic::from_int(x, n)).collect())
            .collect();
        Self::from_rows(v, n).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.conductor);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.conductor);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = zero_vector(self.rows, self.conductor);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero(self.conductor);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, col).inv().expect("nonzero pivot");
            for j in col..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            let pivot_row: Vector = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    if !pivot_row[j].is_zero() {
                        let t = &f * &pivot_row[j];
                        m.data[i * m.cols + j] -= &t;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right kernel, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let n = self.conductor;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = zero_vector(self.cols, n);
            v[free] = Cyclotomic::one(n);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let d = self.rows;
        if d == 0 {
            return Ok(self.clone());
        }
        let mut aug = Self::zeros(d, 2 * d, self.conductor);
        for i in 0..d {
            for j in 0..d {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, d + i, Cyclotomic::one(self.conductor));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < d || pivots[d - 1] != d - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(d, d, self.conductor);
        for i in 0..d {
            for j in 0..d {
                inv.set(i, j, r.get(i, d + j).clone());
            }
        }
        Ok(inv)
    }

    /// Some `x` with `self * x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Cyclotomic]) -> Option<Vector> {
        let c = self.cols;
        let mut aug = Self::zeros(self.rows, c + 1, self.conductor);
        for i in 0..self.rows {
            for j in 0..c {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, c, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&c) {
            return None;
        }
        let mut x = zero_vector(c, self.conductor);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, c).clone();
        }
        Some(x)
    }

    pub fn pow(&self, e: usize) -> Matrix {
        let mut acc = Self::identity(self.rows, self.conductor);
        for _ in 0..e {
            acc = acc.mul(self).expect("square matrix");
        }
        acc
    }

    pub fn lift(&self, m: u32) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            conductor: m,
            data: lift_vector(&self.data, m)?,
        })
    }

    /// Block-diagonal matrix.
    pub fn block_diag(blocks: &[Matrix], n: u32) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols, n);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} N={}]", self.rows, self.cols, self.conductor)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vectors().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vector> = Vec::deserialize(d)?;
        let n = rows
            .first()
            .and_then(|r| r.first())
            .map_or(1, |x| x.conductor());
        if rows.iter().flatten().any(|x| x.conductor() != n) {
            return Err(serde::de::Error::custom("mixed conductors in matrix"));
        }
        Matrix::from_rows(rows, n).map_err(serde::de::Error::custom)
    }
}

/// Linear subspace stored by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    conductor: u32,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize, n: u32) -> Self {
        Subspace {
            ambient_dim,
            conductor: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize, n: u32) -> Self {
        Self::span(
            &(0..ambient_dim)
                .map(|i| unit_vector(ambient_dim, i, n))
                .collect::<Vec<_>>(),
            ambient_dim,
            n,
        )
    }

    pub fn span(vectors: &[Vector], ambient_dim: usize, n: u32) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim, n);
        }
        let m = Matrix::from_rows(vectors.to_vec(), n).expect("equal lengths");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient_dim,
            conductor: n,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Cyclotomic]) -> Option<Vector> {
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = zero_vector(self.ambient_dim, self.conductor);
        for (ci, b) in c.iter().zip(&self.basis) {
            add_scaled(&mut recon, ci, b);
        }
        if recon.as_slice() == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        self.coords(v).is_some()
    }
}

/// Sparse row: sorted `(column, value)` pairs with nonzero values.
pub type SparseRow = Vec<(usize, Cyclotomic)>;

fn axpy_sparse(row: &SparseRow, f: &Cyclotomic, pivot: &SparseRow) -> SparseRow {
    // row - f * pivot
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let ca = row.get(a).map(|x| x.0).unwrap_or(usize::MAX);
        let cb = pivot.get(b).map(|x| x.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(row[a].clone());
            a += 1;
        } else if cb < ca {
            out.push((cb, -(f * &pivot[b].1)));
            b += 1;
        } else {
            let v = &row[a].1 - &(f * &pivot[b].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

/// Canonical kernel basis of a sparse system in `ncols` unknowns.
///
/// Rows are reduced incrementally against a pivot table keyed by leading
/// column; rows are fed shortest first. The result is independent of the
/// row order because the reduced echelon form is unique.
pub fn sparse_kernel(mut rows: Vec<SparseRow>, ncols: usize, n: u32) -> Vec<SparseRow> {
    rows.retain(|r| !r.is_empty());
    rows.sort_by_key(|r| r.len());
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        // reduce leading entries until the leading column is new
        loop {
            let Some(&(lead, _)) = row.first() else { break };
            match pivots.get(&lead) {
                Some(p) => {
                    let f = row[0].1.clone();
                    row = axpy_sparse(&row, &f, p);
                }
                None => break,
            }
        }
        if row.is_empty() {
            continue;
        }
        let inv = row[0].1.inv().expect("nonzero lead");
        for e in row.iter_mut() {
            e.1 = &e.1 * &inv;
        }
        pivots.insert(row[0].0, row);
    }
    // back substitution to reduced form, highest pivot first
    let keys: Vec<usize> = pivots.keys().rev().copied().collect();
    let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for k in keys {
        let mut row = pivots.remove(&k).unwrap();
        let mut i = 1;
        while i < row.len() {
            let c = row[i].0;
            if let Some(p) = reduced.get(&c) {
                let f = row[i].1.clone();
                row = axpy_sparse(&row, &f, p);
                // entries before i are unchanged because pivot rows start at c
            } else {
                i += 1;
            }
        }
        reduced.insert(k, row);
    }
    let mut kernel = Vec::new();
    for free in (0..ncols).filter(|c| !reduced.contains_key(c)) {
        let mut v: SparseRow = vec![(free, Cyclotomic::one(n))];
        for (&p, row) in &reduced {
            if let Ok(pos) = row.binary_search_by_key(&free, |e| e.0) {
                v.push((p, -&row[pos].1));
            }
        }
        v.sort_by_key(|e| e.0);
        kernel.push(v);
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace() {
        let m = Matrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]], 1);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vector(&m.mul_vec(&ns[0]).unwrap()));
    }

    #[test]
    fn inverse() {
        let m = Matrix::from_int_rows(&[vec![2, 1], vec![1, 1]], 1);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        let s = Matrix::from_int_rows(&[vec![1, 2], vec![2, 4]], 1);
        assert_eq!(s.inverse(), Err(Error::Singular));
    }

    #[test]
    fn sparse_matches_dense() {
        let dense = Matrix::from_int_rows(
            &[
                vec![1, 0, 2, 0, 1],
                vec![0, 1, 1, 0, 0],
                vec![1, 1, 3, 0, 1],
                vec![0, 0, 0, 1, -1],
            ],
            1,
        );
        let rows: Vec<SparseRow> = dense
            .row_vectors()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        let sk = sparse_kernel(rows, 5, 1);
        let dk = dense.nullspace();
        assert_eq!(sk.len(), dk.len());
        for (s, d) in sk.iter().zip(&dk) {
            let mut v = zero_vector(5, 1);
            for (c, x) in s {
                v[*c] = x.clone();
            }
            assert_eq!(&v, d);
        }
    }

    #[test]
    fn subspace_coords() {
        let s = Subspace::span(
            &[
                vec![Cyclotomic::from_int(1, 1), Cyclotomic::from_int(1, 1), Cyclotomic::zero(1)],
                vec![Cyclotomic::from_int(2, 1), Cyclotomic::from_int(2, 1), Cyclotomic::zero(1)],
            ],
            3,
            1,
        );
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[Cyclotomic::from_int(3, 1), Cyclotomic::from_int(3, 1), Cyclotomic::zero(1)]));
        assert!(!s.contains(&unit_vector(3, 2, 1)));
    }
}
