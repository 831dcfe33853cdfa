use serde::{Deserialize, Serialize};

use super::LieAlgebra;
use crate::error::Result;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalars::Cyclotomic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementType {
    Nilpotent,
    Semisimple,
    Mixed,
}

pub fn centralizer(g: &LieAlgebra, x: &[Cyclotomic]) -> Result<Subspace> {
    let ad = g.ad_matrix(x)?;
    Ok(Subspace::span(&ad.nullspace(), g.dim(), g.conductor()))
}

/// `dim g^x == rank`.
pub fn is_regular(g: &LieAlgebra, x: &[Cyclotomic], rank: usize) -> Result<bool> {
    Ok(centralizer(g, x)?.dim() == rank)
}

/// Monic minimal polynomial of a square matrix, constant term first.
///
/// Found as the first linear dependency among `I, A, A^2, ...`.
pub fn minimal_polynomial(a: &Matrix) -> Vec<Cyclotomic> {
    let d = a.rows();
    let n = a.conductor();
    let flat = |m: &Matrix| -> Vector { (0..d * d).map(|e| m.get(e / d, e % d).clone()).collect() };
    let mut powers = vec![flat(&Matrix::identity(d, n))];
    let mut cur = Matrix::identity(d, n);
    loop {
        cur = cur.mul(a).expect("square");
        let target = flat(&cur);
        // solve sum_j c_j powers[j] = target
        let k = powers.len();
        let mut cols = powers.clone();
        cols.push(target);
        let m = Matrix::from_columns(&cols, d * d, n);
        let ns = m.nullspace();
        if let Some(v) = ns.into_iter().find(|v| !v[k].is_zero()) {
            let lead = v[k].inv().expect("nonzero");
            return v.iter().map(|c| c * &lead).collect();
        }
        powers.push(flat(&cur));
    }
}

// zero polynomial is the empty vector
fn trim(p: &mut Vec<Cyclotomic>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_rem(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero divisor");
    while r.len() > db {
        let dr = r.len() - 1;
        let f = &r[dr] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            let t = &f * bj;
            r[dr - db + j] -= &t;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn is_squarefree(p: &[Cyclotomic]) -> bool {
    if p.len() <= 2 {
        return true;
    }
    let deriv: Vec<Cyclotomic> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&crate::scalars::rational(i as i64, 1)))
        .collect();
    poly_gcd(p, &deriv).len() == 1
}

/// Adjoint criterion: nilpotent iff `ad x` is nilpotent, semisimple iff the
/// minimal polynomial of `ad x` is squarefree.
pub fn element_type(g: &LieAlgebra, x: &[Cyclotomic]) -> Result<ElementType> {
    let ad = g.ad_matrix(x)?;
    if ad.pow(g.dim().max(1)).is_zero() {
        return Ok(ElementType::Nilpotent);
    }
    if is_squarefree(&minimal_polynomial(&ad)) {
        Ok(ElementType::Semisimple)
    } else {
        Ok(ElementType::Mixed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{construct_classical, ClassicalKind};

    fn vec_of(g: &LieAlgebra, terms: &[(usize, i64)]) -> Vector {
        let mut v = g.zero_vector();
        for &(i, c) in terms {
            v[i] = Cyclotomic::from_int(c, g.conductor());
        }
        v
    }

    #[test]
    fn sl2_centralizers() {
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let h = g.basis_vector(0);
        let c = centralizer(&g, &h).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&h));
        assert_eq!(centralizer(&g, &g.zero_vector()).unwrap().dim(), 3);
    }

    #[test]
    fn sl3_regularity() {
        // basis: h1 h2 E12 E13 E21 E23 E31 E32
        let g = construct_classical(ClassicalKind::Sl, 3).unwrap();
        let idx = |l: &str| g.labels().iter().position(|x| x == l).unwrap();
        let e = vec_of(&g, &[(idx("E12"), 1), (idx("E23"), 1)]);
        assert_eq!(centralizer(&g, &e).unwrap().dim(), 2);
        assert!(is_regular(&g, &e, 2).unwrap());
        let e12 = vec_of(&g, &[(idx("E12"), 1)]);
        assert_eq!(centralizer(&g, &e12).unwrap().dim(), 4);
        assert!(!is_regular(&g, &e12, 2).unwrap());
        assert!(!is_regular(&g, &g.zero_vector(), 2).unwrap());
        assert_eq!(element_type(&g, &e).unwrap(), ElementType::Nilpotent);
    }

    #[test]
    fn sl2_element_types() {
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap();
        let e = g.basis_vector(1);
        let h = g.basis_vector(0);
        assert_eq!(element_type(&g, &e).unwrap(), ElementType::Nilpotent);
        assert_eq!(element_type(&g, &h).unwrap(), ElementType::Semisimple);
        let he = vec_of(&g, &[(0, 1), (1, 1)]);
        assert_eq!(element_type(&g, &he).unwrap(), ElementType::Semisimple);
    }

    #[test]
    fn gl2_mixed_element() {
        // identity + E12 has ad = ad(E12), nilpotent; use diag(1,1)+E12 in gl2
        // shifted by a non-central semisimple part in gl3 instead.
        let g = construct_classical(ClassicalKind::Gl, 3).unwrap();
        let idx = |l: &str| g.labels().iter().position(|x| x == l).unwrap();
        // x = diag(1,1,0) + E12: semisimple part diag(1,1,0), nilpotent E12 commuting.
        let x = vec_of(&g, &[(idx("E11"), 1), (idx("E22"), 1), (idx("E12"), 1)]);
        assert_eq!(element_type(&g, &x).unwrap(), ElementType::Mixed);
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let p = Matrix::from_int_rows(&[vec![1, 0], vec![0, 0]], 1);
        let mp = minimal_polynomial(&p);
        // t^2 - t
        assert_eq!(mp.len(), 3);
        assert!(mp[0].is_zero());
        assert_eq!(mp[1], Cyclotomic::from_int(-1, 1));
        assert!(is_squarefree(&mp));
        let j = Matrix::from_int_rows(&[vec![0, 1], vec![0, 0]], 1);
        assert!(!is_squarefree(&minimal_polynomial(&j)));
    }
}
