//! Sparse multivariate polynomials over a cyclotomic field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{rational, Cyclotomic};

/// Functions on `q` (coordinates on `q`) or elements of `S(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Fun,
    Sym,
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `m` in `n` variables, in
/// graded-lex order.
pub fn monomials_of_degree(n: usize, m: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if m == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, m, &mut cur, &mut out);
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    space: Space,
    conductor: u32,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl Polynomial {
    pub fn zero(nvars: usize, space: Space, conductor: u32) -> Self {
        Polynomial {
            nvars,
            space,
            conductor,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Cyclotomic, nvars: usize, space: Space) -> Self {
        let mut p = Self::zero(nvars, space, c.conductor());
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(i: usize, nvars: usize, space: Space, conductor: u32) -> Self {
        let mut p = Self::zero(nvars, space, conductor);
        p.add_term(Monomial::var(nvars, i), Cyclotomic::one(conductor));
        p
    }

    /// `sum_i c_i x_i`.
    pub fn linear(coeffs: &[Cyclotomic], space: Space, conductor: u32) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n, space, conductor);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, i), c.clone());
        }
        p
    }

    pub fn from_terms(
        nvars: usize,
        space: Space,
        conductor: u32,
        terms: impl IntoIterator<Item = (Monomial, Cyclotomic)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars, space, conductor);
        for (m, c) in terms {
            if m.0.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: m.0.len(),
                });
            }
            if c.conductor() != conductor {
                return Err(Error::ConductorMismatch(conductor, c.conductor()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Cyclotomic {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.conductor))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Cyclotomic::from_int(-1, self.conductor))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.nvars, self.space, self.conductor);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.nvars, self.space, self.conductor);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<u32> = a.0.iter().zip(&b.0).map(|(p, q)| p + q).collect();
                out.add_term(Monomial(e), x * y);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::constant(Cyclotomic::one(self.conductor), self.nvars, self.space);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.space, self.conductor);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut mm = m.0.clone();
            mm[i] -= 1;
            out.add_term(Monomial(mm), c.scale(&rational(e as i64, 1)));
        }
        out
    }

    pub fn eval(&self, point: &[Cyclotomic]) -> Cyclotomic {
        let mut s = Cyclotomic::zero(self.conductor);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t = &t * x;
                }
            }
            s += &t;
        }
        s
    }

    /// Substitutes `x_i -> images[i]`; the images share a new variable set.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let (nv, sp) = match images.first() {
            Some(p) => (p.nvars, p.space),
            None => (0, self.space),
        };
        let one = Self::constant(Cyclotomic::one(self.conductor), nv, sp);
        let mut out = Self::zero(nv, sp, self.conductor);
        // cache powers of each image
        let maxdeg = self.degree().unwrap_or(0) as usize;
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            let needed = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
            let mut v = vec![one.clone()];
            for _ in 0..needed.min(maxdeg) {
                let last = v.last().unwrap().mul(img)?;
                v.push(last);
            }
            powers.push(v);
        }
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone(), nv, sp);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize])?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Linear change of variables `x_i -> sum_a m[i][a] y_a`.
    pub fn linear_substitute(&self, m: &Matrix, space: Space) -> Result<Self> {
        let images: Vec<Polynomial> = (0..m.rows())
            .map(|i| Polynomial::linear(m.row(i), space, self.conductor))
            .collect();
        self.substitute(&images)
    }

    pub fn with_space(mut self, space: Space) -> Self {
        self.space = space;
        self
    }

    pub fn lift(&self, m: u32) -> Result<Self> {
        let mut out = Self::zero(self.nvars, self.space, m);
        for (mono, c) in &self.terms {
            out.terms.insert(mono.clone(), c.lift(m)?);
        }
        Ok(out)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.terms.iter().next_back() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = if self.space == Space::Sym { "e" } else { "x" };
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let body: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("{sym}{i}") } else { format!("{sym}{i}^{e}") })
                .collect();
            if body.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", body.join("*"))?;
            } else {
                write!(f, "({c})*{}", body.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{:?}, {} vars]({self})", self.space, self.nvars)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    space: Space,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    nvars: Option<usize>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    conductor: Option<u32>,
    terms: Vec<(Vec<u32>, Cyclotomic)>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            space: self.space,
            nvars: Some(self.nvars),
            conductor: Some(self.conductor),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.0.clone(), c.clone()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PolyJson::deserialize(d)?;
        let nvars = j
            .nvars
            .or_else(|| j.terms.first().map(|t| t.0.len()))
            .ok_or_else(|| D::Error::custom("cannot infer the number of variables"))?;
        let conductor = j
            .conductor
            .or_else(|| j.terms.first().map(|t| t.1.conductor()))
            .unwrap_or(1);
        Polynomial::from_terms(
            nvars,
            j.space,
            conductor,
            j.terms.into_iter().map(|(e, c)| (Monomial(e), c)),
        )
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i, 3, Space::Fun, 1)
    }

    #[test]
    fn monomial_counts_and_order() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(8, 6).len(), 1716);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        let ms = monomials_of_degree(2, 2);
        assert_eq!(ms[0].0, vec![2, 0]);
        assert!(Monomial(vec![2, 0]) < Monomial(vec![1, 1]));
        assert!(Monomial(vec![0, 1]) < Monomial(vec![2, 0]));
    }

    #[test]
    fn arithmetic() {
        let p = x(0).add(&x(1)).unwrap();
        let sq = p.mul(&p).unwrap();
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.coeff(&Monomial(vec![1, 1, 0])), Cyclotomic::from_int(2, 1));
        assert!(sq.sub(&sq).unwrap().is_zero());
        assert_eq!(sq.derivative(0), p.scale(&Cyclotomic::from_int(2, 1)));
        let pt = vec![Cyclotomic::from_int(2, 1), Cyclotomic::from_int(3, 1), Cyclotomic::zero(1)];
        assert_eq!(sq.eval(&pt), Cyclotomic::from_int(25, 1));
        assert!(x(0).add(&Polynomial::var(0, 3, Space::Sym, 1)).is_err());
    }

    #[test]
    fn substitution() {
        // (x0 + x1)^2 with x0 -> y0, x1 -> -y0 vanishes
        let p = x(0).add(&x(1)).unwrap().pow(2).unwrap();
        let m = Matrix::from_int_rows(&[vec![1], vec![-1], vec![0]], 1);
        assert!(p.linear_substitute(&m, Space::Fun).unwrap().is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let p = x(0).mul(&x(2)).unwrap().add(&x(1)).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let minimal = r#"{"space":"sym","terms":[[[1,0],{"N":1,"c":["2"]}]]}"#;
        let q: Polynomial = serde_json::from_str(minimal).unwrap();
        assert_eq!(q.nvars(), 2);
    }
}
