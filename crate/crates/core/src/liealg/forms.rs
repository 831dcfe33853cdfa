use serde::{Deserialize, Serialize};

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::Cyclotomic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormSource {
    Killing,
    TraceDefining,
}

/// A bilinear form given by its Gram matrix in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                got: matrix.cols(),
            });
        }
        Ok(BilinearForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn conductor(&self) -> u32 {
        self.matrix.conductor()
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    pub fn eval(&self, x: &[Cyclotomic], y: &[Cyclotomic]) -> Cyclotomic {
        let by = self.matrix.mul_vec(y).expect("form dimension");
        let mut s = Cyclotomic::zero(self.conductor());
        for (a, b) in x.iter().zip(&by) {
            if !a.is_zero() && !b.is_zero() {
                s += &(a * b);
            }
        }
        s
    }

    /// `b([e_i, e_j], e_l) + b(e_j, [e_i, e_l]) = 0` on all basis triples.
    pub fn is_invariant(&self, g: &LieAlgebra) -> bool {
        let d = g.dim();
        if d != self.dim() {
            return false;
        }
        let n = self.conductor();
        for i in 0..d {
            for j in 0..d {
                for l in j..d {
                    let mut s = Cyclotomic::zero(n);
                    for (k, c) in g.basis_bracket(i, j) {
                        s += &(c * self.matrix.get(*k, l));
                    }
                    for (k, c) in g.basis_bracket(i, l) {
                        s += &(c * self.matrix.get(j, *k));
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Killing form `tr(ad x ad y)`, or the trace form of the defining representation.
pub fn invariant_form(g: &LieAlgebra, source: FormSource) -> Result<BilinearForm> {
    let d = g.dim();
    let n = g.conductor();
    let mats: Vec<Matrix> = match source {
        FormSource::Killing => (0..d)
            .map(|i| g.ad_matrix(&g.basis_vector(i)))
            .collect::<Result<_>>()?,
        FormSource::TraceDefining => g.realization().ok_or(Error::NotRealized)?.basis().to_vec(),
    };
    let mut m = Matrix::zeros(d, d, n);
    for i in 0..d {
        for j in i..d {
            let v = trace_of_product(&mats[i], &mats[j]);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    BilinearForm::new(m)
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> Cyclotomic {
    let mut s = Cyclotomic::zero(a.conductor());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            let y = b.get(k, i);
            if !x.is_zero() && !y.is_zero() {
                s += &(x * y);
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{construct_classical, ClassicalKind};

    #[test]
    fn sl2_killing_values() {
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let b = invariant_form(&g, FormSource::Killing).unwrap();
        let m = b.matrix();
        let int = |v| Cyclotomic::from_int(v, 1);
        assert_eq!(m.get(0, 0), &int(8));
        assert_eq!(m.get(1, 2), &int(4));
        assert_eq!(m.get(2, 1), &int(4));
        assert!(m.get(1, 1).is_zero() && m.get(0, 1).is_zero() && m.get(2, 2).is_zero());
        assert!(b.is_symmetric() && b.is_nondegenerate() && b.is_invariant(&g));
    }

    #[test]
    fn gl1_killing_is_zero() {
        let g = construct_classical(ClassicalKind::Gl, 1).unwrap();
        let b = invariant_form(&g, FormSource::Killing).unwrap();
        assert!(b.matrix().is_zero());
        assert!(!b.is_nondegenerate());
    }

    #[test]
    fn trace_forms_are_invariant() {
        for (k, n) in [
            (ClassicalKind::Sl, 3),
            (ClassicalKind::So, 4),
            (ClassicalKind::Sp, 4),
            (ClassicalKind::Gl, 2),
        ] {
            let g = construct_classical(k, n).unwrap();
            let b = invariant_form(&g, FormSource::TraceDefining).unwrap();
            assert!(b.is_invariant(&g), "{k:?}{n}");
            assert!(b.is_nondegenerate());
        }
    }

    #[test]
    fn perturbed_form_is_not_invariant() {
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let mut m = invariant_form(&g, FormSource::Killing).unwrap().matrix().clone();
        m.set(0, 0, Cyclotomic::from_int(7, 1));
        assert!(!BilinearForm::new(m).unwrap().is_invariant(&g));
    }
}
