//! Truncated current algebras `g ⊗ k[T]/(T^m)`.
//!
//! The basis is layer-major: all of layer 0 in the base order, then layer 1,
//! and so on, so basis index `l * dim g + a` is `e_a ⊗ T^l`.

use std::sync::Arc;

use serde::Serialize;

use crate::autos::{eigenspace_grading, Automorphism, PeriodicGrading};
use crate::error::{Error, Result};
use crate::liealg::{BilinearForm, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::scalars::{root_of_unity, Cyclotomic};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TakiffAlgebra {
    pub algebra: LieAlgebra,
    pub m: usize,
    pub base: Arc<LieAlgebra>,
}

impl TakiffAlgebra {
    pub fn layer_of(&self, idx: usize) -> usize {
        idx / self.base.dim()
    }

    /// Basis index of `e_a` in layer `l`.
    pub fn index(&self, a: usize, l: usize) -> usize {
        l * self.base.dim() + a
    }

    pub fn layers(&self) -> Vec<usize> {
        (0..self.algebra.dim()).map(|i| self.layer_of(i)).collect()
    }
}

pub fn takiff(g: &LieAlgebra, m: usize) -> Result<TakiffAlgebra> {
    if m == 0 {
        return Err(Error::Invalid("Takiff level must be positive".into()));
    }
    if m == 1 {
        return Ok(TakiffAlgebra {
            algebra: g.clone(),
            m,
            base: Arc::new(g.clone()),
        });
    }
    let d = g.dim();
    let mut labels = Vec::with_capacity(m * d);
    for l in 0..m {
        for name in g.labels() {
            labels.push(format!("{name}[{l}]"));
        }
    }
    let mut entries = Vec::new();
    for (i, j, row) in g.brackets() {
        for p in 0..m {
            for q in 0..m - p {
                for (k, c) in row {
                    entries.push((p * d + i, q * d + j, (p + q) * d + k, c.clone()));
                }
            }
        }
    }
    let layers = (0..m * d).map(|i| i / d.max(1)).collect();
    let algebra = LieAlgebra::from_structure_constants(m * d, g.conductor(), labels, entries)?
        .with_tags(Some(layers))?;
    Ok(TakiffAlgebra {
        algebra,
        m,
        base: Arc::new(g.clone()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftVariant {
    /// `theta^|q[i] = z^{-i} theta`.
    Twisted,
    /// `theta^|q[i] = theta`.
    Constant,
}

/// The lift of `theta` to `g<m>` with the twisted rule `z^{-i} theta` on layer `i`.
pub fn lift_automorphism(theta: &Automorphism, m: usize) -> Result<(TakiffAlgebra, Automorphism)> {
    lift_automorphism_with(theta, m, LiftVariant::Twisted)
}

pub fn lift_automorphism_with(
    theta: &Automorphism,
    m: usize,
    variant: LiftVariant,
) -> Result<(TakiffAlgebra, Automorphism)> {
    let t = takiff(theta.algebra(), m)?;
    let n = theta.conductor();
    let zinv = match variant {
        LiftVariant::Twisted => root_of_unity(theta.order() as u64, n)?.inv()?,
        LiftVariant::Constant => Cyclotomic::one(n),
    };
    let mut blocks = Vec::with_capacity(m);
    let mut f = Cyclotomic::one(n);
    for _ in 0..m {
        blocks.push(theta.matrix().scale(&f));
        f = &f * &zinv;
    }
    let matrix = Matrix::block_diag(&blocks, n);
    let hat = Automorphism::new(Arc::new(t.algebra.clone()), matrix)?;
    Ok((t, hat))
}

/// Eigenspace grading of a lifted automorphism.
pub fn hat_eigenspaces(theta_hat: &Automorphism) -> Result<PeriodicGrading> {
    eigenspace_grading(theta_hat)
}

pub fn hat_component(grading: &PeriodicGrading, i: usize) -> Subspace {
    grading.component(i)
}

/// Block dimensions predicted for `g<m>_i`: `sum_j dim g_{(i+j) mod k}`.
pub fn predicted_hat_dims(base_dims: &[usize], m: usize) -> Vec<usize> {
    let k = base_dims.len();
    (0..k)
        .map(|i| (0..m).map(|j| base_dims[(i + j) % k]).sum())
        .collect()
}

/// `b^(x, y) = sum_i b(x_i, y_{m-1-i})`.
pub fn extend_form(b: &BilinearForm, m: usize) -> Result<BilinearForm> {
    if m == 0 {
        return Err(Error::Invalid("Takiff level must be positive".into()));
    }
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let d = b.dim();
    let n = b.conductor();
    let mut out = Matrix::zeros(m * d, m * d, n);
    for i in 0..m {
        let j = m - 1 - i;
        for a in 0..d {
            for c in 0..d {
                let v = b.matrix().get(a, c);
                if !v.is_zero() {
                    out.set(i * d + a, j * d + c, v.clone());
                }
            }
        }
    }
    BilinearForm::new(out)
}

/// Exponent `c` with `b(theta x, theta y) = z^c b(x, y)`, if any.
pub fn form_exponent(theta: &Automorphism, b: &BilinearForm) -> Result<Option<usize>> {
    let a = theta.matrix();
    let pulled = a.transpose().mul(b.matrix())?.mul(a)?;
    let k = theta.order();
    let z = root_of_unity(k as u64, theta.conductor())?;
    let mut zc = Cyclotomic::one(theta.conductor());
    for c in 0..k {
        if pulled == b.matrix().scale(&zc) {
            return Ok(Some(c));
        }
        zc = &zc * &z;
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormEigenReport {
    pub k: usize,
    pub m: usize,
    /// `b` is a `z^c`-eigenvector of `theta`.
    pub c: usize,
    /// `c + 1 - m mod k`.
    pub hat_exponent: usize,
    pub hat_eigenvalue: Cyclotomic,
    /// `b^(theta^ x, theta^ y) = z^{c+1-m} b^(x, y)` on all basis pairs.
    pub eigen_identity: bool,
    /// `dual[i] = c + 1 - m - i mod k`.
    pub dual: Vec<usize>,
    /// Blocks `i`, `j` of the lifted grading pair nontrivially iff `j = dual[i]`,
    /// and each such pairing is perfect.
    pub pairing_matches: bool,
    /// `b^` restricted to the fixed-point block is nondegenerate.
    pub fixed_quadratic: bool,
}

/// Checks the eigenvalue of the extended form under the lift of `theta` to
/// `g<m>`, and the duality between the eigenspaces it induces.
pub fn form_eigen_report(theta: &Automorphism, b: &BilinearForm, m: usize) -> Result<FormEigenReport> {
    let c = form_exponent(theta, b)?
        .ok_or_else(|| Error::NotEigenvector("form is not a theta-eigenvector".into()))?;
    let k = theta.order();
    let n = theta.conductor();
    let (_, hat) = lift_automorphism(theta, m)?;
    let bh = extend_form(b, m)?;
    let e = (c as i64 + 1 - m as i64).rem_euclid(k as i64) as usize;
    let z = root_of_unity(k as u64, n)?;
    let eigenvalue = z.pow(e as i64)?;
    let a = hat.matrix();
    let pulled = a.transpose().mul(bh.matrix())?.mul(a)?;
    let eigen_identity = pulled == bh.matrix().scale(&eigenvalue);
    let dual: Vec<usize> = (0..k)
        .map(|i| (e as i64 - i as i64).rem_euclid(k as i64) as usize)
        .collect();

    let gr = eigenspace_grading(&hat)?;
    let p = &gr.base_change;
    let gram = p.transpose().mul(bh.matrix())?.mul(p)?;
    let mut pairing_matches = true;
    for i in 0..k {
        for j in 0..k {
            let sub = sub_matrix(&gram, &gr.blocks[i], &gr.blocks[j]);
            let nonzero = !sub.is_zero();
            if nonzero && j != dual[i] {
                pairing_matches = false;
            }
            if j == dual[i] {
                let full = gr.blocks[i].len() == gr.blocks[j].len() && sub.rank() == gr.blocks[i].len();
                if !full {
                    pairing_matches = false;
                }
            }
        }
    }
    let g00 = sub_matrix(&gram, &gr.blocks[0], &gr.blocks[0]);
    let fixed_quadratic = g00.rank() == gr.blocks[0].len();
    Ok(FormEigenReport {
        k,
        m,
        c,
        hat_exponent: e,
        hat_eigenvalue: eigenvalue,
        eigen_identity,
        dual,
        pairing_matches,
        fixed_quadratic,
    })
}

fn sub_matrix(m: &Matrix, rows: &[usize], cols: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(rows.len(), cols.len(), m.conductor());
    for (a, &r) in rows.iter().enumerate() {
        for (b, &c) in cols.iter().enumerate() {
            out.set(a, b, m.get(r, c).clone());
        }
    }
    out
}

impl Serialize for TakiffAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let mut v = serde_json::to_value(&self.algebra).map_err(S::Error::custom)?;
        let obj = v.as_object_mut().expect("algebra serializes to an object");
        obj.insert("m".into(), self.m.into());
        obj.insert("layers".into(), serde_json::to_value(self.layers()).map_err(S::Error::custom)?);
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autos::{inner_from_torus, outer_involution, InvolutionVariant};
    use crate::liealg::{construct_classical, invariant_form, ClassicalKind, FormSource};
    use crate::linalg::Vector;

    fn sl(n: usize) -> LieAlgebra {
        construct_classical(ClassicalKind::Sl, n).unwrap()
    }

    #[test]
    fn takiff_brackets() {
        // sl2 basis: h, e, f
        let t = takiff(&sl(2), 2).unwrap();
        assert_eq!(t.algebra.dim(), 6);
        assert!(t.algebra.validate().passed);
        let g = &t.algebra;
        let e0 = g.basis_vector(t.index(1, 0));
        let f1 = g.basis_vector(t.index(2, 1));
        let e1 = g.basis_vector(t.index(1, 1));
        assert_eq!(g.bracket(&e0, &f1).unwrap(), g.basis_vector(t.index(0, 1)));
        assert_eq!(g.bracket(&e1, &f1).unwrap(), g.zero_vector());
        assert_eq!(takiff(&sl(2), 1).unwrap().algebra, sl(2));
        let gl1 = construct_classical(ClassicalKind::Gl, 1).unwrap();
        assert!(takiff(&gl1, 3).unwrap().algebra.is_abelian());
        assert!(takiff(&sl(2), 0).is_err());
    }

    #[test]
    fn lifted_involution() {
        let th = outer_involution(&sl(3), InvolutionVariant::NegTranspose)
            .unwrap()
            .lift_for_grading()
            .unwrap();
        let (_, hat) = lift_automorphism(&th, 2).unwrap();
        assert_eq!(hat.order(), 2);
        let gr = hat_eigenspaces(&hat).unwrap();
        assert_eq!(gr.dims(), vec![8, 8]);
        assert_eq!(predicted_hat_dims(&[3, 5], 2), vec![8, 8]);
        let id = crate::autos::Automorphism::identity(Arc::new(sl(2)));
        let (_, hat) = lift_automorphism(&id, 3).unwrap();
        assert_eq!(hat.order(), 1);
        assert_eq!(hat_eigenspaces(&hat).unwrap().dims(), vec![9]);
    }

    #[test]
    fn sp4_lift_order() {
        let sp4 = construct_classical(ClassicalKind::Sp, 4).unwrap();
        let th = inner_from_torus(&sp4, &[1, 0, 2, 3], 4).unwrap();
        let (_, hat) = lift_automorphism(&th, 4).unwrap();
        assert_eq!(hat.order(), 4);
        let gr = hat_eigenspaces(&hat).unwrap();
        assert_eq!(gr.dims()[0], 10);
        assert_eq!(gr.dims(), predicted_hat_dims(&[2, 3, 2, 3], 4));
    }

    #[test]
    fn extended_killing_form() {
        let g = sl(2);
        let b = invariant_form(&g, FormSource::Killing).unwrap();
        let bh = extend_form(&b, 2).unwrap();
        let t = takiff(&g, 2).unwrap();
        let e0: Vector = t.algebra.basis_vector(t.index(1, 0));
        let f1 = t.algebra.basis_vector(t.index(2, 1));
        let f0 = t.algebra.basis_vector(t.index(2, 0));
        assert_eq!(bh.eval(&e0, &f1), Cyclotomic::from_int(4, 1));
        assert!(bh.eval(&e0, &f0).is_zero());
        assert_eq!(extend_form(&b, 1).unwrap(), b);
        let t3 = takiff(&g, 3).unwrap();
        let bh3 = extend_form(&b, 3).unwrap();
        assert!(bh3.is_symmetric() && bh3.is_invariant(&t3.algebra) && bh3.is_nondegenerate());
        let gl1 = construct_classical(ClassicalKind::Gl, 1).unwrap();
        assert!(extend_form(&invariant_form(&gl1, FormSource::Killing).unwrap(), 2).is_err());
    }

    #[test]
    fn form_eigenvalues() {
        let th = outer_involution(&sl(2), InvolutionVariant::NegTranspose)
            .unwrap()
            .lift_for_grading()
            .unwrap();
        let b = invariant_form(th.algebra(), FormSource::Killing).unwrap();
        let r = form_eigen_report(&th, &b, 2).unwrap();
        assert_eq!(r.c, 0);
        assert_eq!(r.hat_eigenvalue, Cyclotomic::from_int(-1, 2));
        assert_eq!(r.dual, vec![1, 0]);
        assert!(r.eigen_identity && r.pairing_matches && !r.fixed_quadratic);
        let r = form_eigen_report(&th, &b, 3).unwrap();
        assert!(r.hat_eigenvalue.is_one() && r.fixed_quadratic && r.pairing_matches);
        let id = crate::autos::Automorphism::identity(Arc::new(sl(2)));
        let b = invariant_form(&sl(2), FormSource::Killing).unwrap();
        assert!(form_eigen_report(&id, &b, 1).unwrap().hat_eigenvalue.is_one());
    }

    #[test]
    fn takiff_json_has_layers() {
        let t = takiff(&sl(2), 2).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["m"], 2);
        assert_eq!(v["layers"].as_array().unwrap().len(), 6);
        assert_eq!(v["dim"], 6);
    }
}
