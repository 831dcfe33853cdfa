//! Matrix realizations of the classical series.
//!
//! Bases:
//! - `gl_n`: `E_ij` in row-major order.
//! - `sl_n`: `h_i = E_ii - E_{i+1,i+1}` first, then `E_ij` (`i != j`) row-major.
//! - `so_n`: `F_ij = E_ij - E_ji` for `i < j` (skew matrices, identity form).
//! - `sp_2m` with `J = [[0, I], [-I, 0]]`: Cartan `E_ii - E_{m+i,m+i}`, then
//!   `E_ij - E_{m+j,m+i}` (`i != j`), then `E_{i,m+j} + E_{j,m+i}` (`i <= j`,
//!   single term on the diagonal), then the transposes.

use serde::{Deserialize, Serialize};

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalars::Cyclotomic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalKind {
    Gl,
    Sl,
    So,
    Sp,
}

impl std::str::FromStr for ClassicalKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Self::Gl),
            "sl" => Ok(Self::Sl),
            "so" => Ok(Self::So),
            "sp" => Ok(Self::Sp),
            _ => Err(Error::Parse(format!("unknown classical kind {s:?}"))),
        }
    }
}

/// Basis matrices of a matrix Lie algebra with a coordinate solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    kind: ClassicalKind,
    size: usize,
    basis: Vec<Matrix>,
    pivots: Vec<(usize, usize)>,
    // inverse of the pivot-entry submatrix: coords = solve * X[pivots]
    solve: Matrix,
}

impl Realization {
    fn new(kind: ClassicalKind, size: usize, basis: Vec<Matrix>, n: u32) -> Result<Self> {
        let dim = basis.len();
        let flat: Vec<Vector> = basis
            .iter()
            .map(|b| {
                (0..size * size)
                    .map(|e| b.get(e / size, e % size).clone())
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(flat, n)?;
        let (_, piv) = m.rref();
        if piv.len() != dim {
            return Err(Error::Construction("dependent basis matrices".into()));
        }
        // sub[i][r] = basis_i at pivot r; we need coords c with sum_i c_i basis_i[p] = X[p]
        let mut sub = Matrix::zeros(dim, dim, n);
        for (r, &p) in piv.iter().enumerate() {
            for i in 0..dim {
                sub.set(r, i, m.get(i, p).clone());
            }
        }
        let solve = sub.inverse()?;
        Ok(Realization {
            kind,
            size,
            basis,
            pivots: piv.iter().map(|&p| (p / size, p % size)).collect(),
            solve,
        })
    }

    pub fn kind(&self) -> ClassicalKind {
        self.kind
    }

    /// Size of the defining matrices.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn conductor(&self) -> u32 {
        self.solve.conductor()
    }

    /// The matrix of a coordinate vector.
    pub fn matrix_of(&self, v: &[Cyclotomic]) -> Matrix {
        let n = self.conductor();
        let mut m = Matrix::zeros(self.size, self.size, n);
        for (c, b) in v.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        m
    }

    /// Coordinates of a matrix, or `None` if it is outside the algebra.
    pub fn coords(&self, x: &Matrix) -> Option<Vector> {
        let rhs: Vector = self.pivots.iter().map(|&(i, j)| x.get(i, j).clone()).collect();
        let c = self.solve.mul_vec(&rhs).ok()?;
        if &self.matrix_of(&c) == x {
            Some(c)
        } else {
            None
        }
    }

    pub(crate) fn lift(&self, m: u32) -> Result<Self> {
        Ok(Realization {
            kind: self.kind,
            size: self.size,
            basis: self
                .basis
                .iter()
                .map(|b| b.lift(m))
                .collect::<Result<_>>()?,
            pivots: self.pivots.clone(),
            solve: self.solve.lift(m)?,
        })
    }

    /// Rank of the classical algebra.
    pub fn rank(&self) -> usize {
        match self.kind {
            ClassicalKind::Gl => self.size,
            ClassicalKind::Sl => self.size - 1,
            ClassicalKind::So | ClassicalKind::Sp => self.size / 2,
        }
    }
}

fn unit(size: usize, i: usize, j: usize, c: i64) -> Matrix {
    let mut m = Matrix::zeros(size, size, 1);
    m.set(i, j, Cyclotomic::from_int(c, 1));
    m
}

fn basis_for(kind: ClassicalKind, n: usize) -> Result<(Vec<Matrix>, Vec<String>)> {
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    match kind {
        ClassicalKind::Gl => {
            if n == 0 {
                return Err(Error::Construction("gl_0".into()));
            }
            for i in 0..n {
                for j in 0..n {
                    basis.push(unit(n, i, j, 1));
                    labels.push(format!("E{}{}", i + 1, j + 1));
                }
            }
        }
        ClassicalKind::Sl => {
            if n < 2 {
                return Err(Error::Construction(format!("sl_{n} needs n >= 2")));
            }
            for i in 0..n - 1 {
                basis.push(unit(n, i, i, 1).add(&unit(n, i + 1, i + 1, -1)));
                labels.push(format!("h{}", i + 1));
            }
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        basis.push(unit(n, i, j, 1));
                        labels.push(format!("E{}{}", i + 1, j + 1));
                    }
                }
            }
        }
        ClassicalKind::So => {
            if n < 2 {
                return Err(Error::Construction(format!("so_{n} needs n >= 2")));
            }
            for i in 0..n {
                for j in i + 1..n {
                    basis.push(unit(n, i, j, 1).add(&unit(n, j, i, -1)));
                    labels.push(format!("F{}{}", i + 1, j + 1));
                }
            }
        }
        ClassicalKind::Sp => {
            if n < 2 || !n.is_multiple_of(2) {
                return Err(Error::Construction(format!("sp_{n} needs even n >= 2")));
            }
            let m = n / 2;
            for i in 0..m {
                basis.push(unit(n, i, i, 1).add(&unit(n, m + i, m + i, -1)));
                labels.push(format!("H{}", i + 1));
            }
            for i in 0..m {
                for j in 0..m {
                    if i != j {
                        basis.push(unit(n, i, j, 1).add(&unit(n, m + j, m + i, -1)));
                        labels.push(format!("A{}{}", i + 1, j + 1));
                    }
                }
            }
            for i in 0..m {
                for j in i..m {
                    let b = if i == j {
                        unit(n, i, m + i, 1)
                    } else {
                        unit(n, i, m + j, 1).add(&unit(n, j, m + i, 1))
                    };
                    basis.push(b);
                    labels.push(format!("B{}{}", i + 1, j + 1));
                }
            }
            for i in 0..m {
                for j in i..m {
                    let c = if i == j {
                        unit(n, m + i, i, 1)
                    } else {
                        unit(n, m + i, j, 1).add(&unit(n, m + j, i, 1))
                    };
                    basis.push(c);
                    labels.push(format!("C{}{}", i + 1, j + 1));
                }
            }
        }
    }
    Ok((basis, labels))
}

/// Structure constants of `gl_n`, `sl_n`, `so_n` or `sp_n` in the bases above.
pub fn construct_classical(kind: ClassicalKind, n: usize) -> Result<LieAlgebra> {
    let (basis, labels) = basis_for(kind, n)?;
    let real = Realization::new(kind, n, basis, 1)?;
    let dim = real.basis.len();
    let mut entries = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            let x = &real.basis[a];
            let y = &real.basis[b];
            let comm = x.mul(y)?.sub(&y.mul(x)?);
            let c = real
                .coords(&comm)
                .ok_or_else(|| Error::Construction("commutator left the algebra".into()))?;
            for (k, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    entries.push((a, b, k, v));
                }
            }
        }
    }
    let rank = real.rank();
    let mut g = LieAlgebra::from_structure_constants(dim, 1, labels, entries)?.with_rank(Some(rank));
    g.set_realization(real);
    Ok(g)
}

/// Coxeter number of a simple classical algebra.
pub fn coxeter_number(kind: ClassicalKind, n: usize) -> Result<usize> {
    let non_simple = || Err(Error::Construction(format!("{kind:?}_{n} is not simple")));
    match kind {
        ClassicalKind::Sl if n >= 2 => Ok(n),
        ClassicalKind::Sp if n >= 2 && n.is_multiple_of(2) => Ok(n),
        ClassicalKind::So if n == 3 => Ok(2),
        ClassicalKind::So if n >= 5 && n % 2 == 1 => Ok(n - 1),
        ClassicalKind::So if n >= 6 && n.is_multiple_of(2) => Ok(n - 2),
        _ => non_simple(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let d = |k, n| construct_classical(k, n).unwrap().dim();
        assert_eq!(d(ClassicalKind::Gl, 3), 9);
        assert_eq!(d(ClassicalKind::Sl, 2), 3);
        assert_eq!(d(ClassicalKind::Sl, 4), 15);
        assert_eq!(d(ClassicalKind::So, 3), 3);
        assert_eq!(d(ClassicalKind::So, 5), 10);
        assert_eq!(d(ClassicalKind::Sp, 4), 10);
        assert_eq!(d(ClassicalKind::Sp, 6), 21);
    }

    #[test]
    fn invalid_kinds() {
        assert!(construct_classical(ClassicalKind::Sp, 3).is_err());
        assert!(construct_classical(ClassicalKind::So, 1).is_err());
        assert!(construct_classical(ClassicalKind::Sl, 1).is_err());
        assert!(construct_classical(ClassicalKind::Gl, 0).is_err());
    }

    #[test]
    fn coxeter() {
        assert_eq!(coxeter_number(ClassicalKind::Sl, 4).unwrap(), 4);
        assert_eq!(coxeter_number(ClassicalKind::Sp, 4).unwrap(), 4);
        assert_eq!(coxeter_number(ClassicalKind::So, 8).unwrap(), 6);
        assert_eq!(coxeter_number(ClassicalKind::So, 5).unwrap(), 4);
        assert!(coxeter_number(ClassicalKind::Gl, 3).is_err());
        assert!(coxeter_number(ClassicalKind::So, 4).is_err());
    }

    #[test]
    fn realization_coords() {
        let g = construct_classical(ClassicalKind::Sp, 4).unwrap();
        let r = g.realization().unwrap();
        for i in 0..g.dim() {
            let m = &r.basis()[i];
            assert_eq!(r.coords(m).unwrap(), g.basis_vector(i));
        }
        // E_11 alone is not symplectic
        assert!(r.coords(&unit(4, 0, 0, 1)).is_none());
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn classical_algebras_satisfy_jacobi() {
        for (k, n) in [
            (ClassicalKind::Gl, 3),
            (ClassicalKind::Sl, 3),
            (ClassicalKind::So, 4),
            (ClassicalKind::Sp, 4),
        ] {
            assert!(construct_classical(k, n).unwrap().validate().passed);
        }
    }
}
