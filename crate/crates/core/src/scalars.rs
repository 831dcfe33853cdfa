//! Exact arithmetic in cyclotomic fields `Q(z_N)`.
//!
//! An element is stored by its coordinates in the power basis
//! `1, z, ..., z^(phi(N)-1)` modulo the `N`-th cyclotomic polynomial. The
//! representation is canonical, so equality is coordinate-wise.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always normalized.
pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn euler_phi(n: u32) -> usize {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

// Exact division of integer polynomials by a monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|r| r.is_zero()));
    q
}

struct FieldData {
    // reductions of z^(phi + j) for j in 0..phi-1
    high_powers: Vec<Vec<Rational>>,
}

impl FieldData {
    fn build(n: u32) -> Self {
        let phi = euler_phi(n);
        let poly = cyclotomic_polynomial(n);
        // z^phi = -sum_{i<phi} poly[i] z^i
        let mut cur: Vec<Rational> = poly[..phi]
            .iter()
            .map(|c| Rational::from_integer(-c.clone()))
            .collect();
        let mut high_powers = Vec::with_capacity(phi.saturating_sub(1));
        for _ in 0..phi.saturating_sub(1) {
            high_powers.push(cur.clone());
            // multiply by z
            let top = cur[phi - 1].clone();
            let mut next = vec![Rational::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for i in 0..phi {
                    next[i] -= &top * Rational::from_integer(poly[i].clone());
                }
            }
            cur = next;
        }
        FieldData { high_powers }
    }
}

fn field(n: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(&n) {
        return f.clone();
    }
    let f = Arc::new(FieldData::build(n));
    cache.write().unwrap().entry(n).or_insert(f).clone()
}

/// An element of `Q(z_N)` in the power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u32,
    c: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        Cyclotomic {
            n,
            c: vec![Rational::zero(); euler_phi(n)],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(Rational::one(), n)
    }

    pub fn from_int(v: i64, n: u32) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)), n)
    }

    pub fn from_rational(r: Rational, n: u32) -> Self {
        let mut x = Self::zero(n);
        x.c[0] = r;
        x
    }

    /// Builds an element from power-basis coordinates.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConductor(0));
        }
        if coeffs.len() != euler_phi(n) {
            return Err(Error::DimensionMismatch {
                expected: euler_phi(n),
                got: coeffs.len(),
            });
        }
        Ok(Cyclotomic { n, c: coeffs })
    }

    /// `z_N^j` for any integer `j`.
    pub fn zeta_pow(n: u32, j: i64) -> Self {
        let e = j.rem_euclid(n as i64) as usize;
        let phi = euler_phi(n);
        if phi == 1 {
            // n = 1 or 2
            let v = if n == 2 && e == 1 { -1 } else { 1 };
            return Self::from_int(v, n);
        }
        // z^e with e < n; reduce through repeated multiplication by z
        let mut x = Self::zero(n);
        if e < phi {
            x.c[e] = Rational::one();
            return x;
        }
        let mut acc = Self::zero(n);
        acc.c[phi - 1] = Rational::one();
        let z = primitive_root(n).unwrap();
        for _ in (phi - 1)..e {
            acc = &acc * &z;
        }
        acc
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1..].iter().all(|c| c.is_zero()) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            n: self.n,
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::ConductorMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            n: self.n,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            n: self.n,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let phi = self.c.len();
        if phi == 1 {
            return Ok(Cyclotomic {
                n: self.n,
                c: vec![&self.c[0] * &other.c[0]],
            });
        }
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let f = field(self.n);
        let mut out: Vec<Rational> = prod[..phi].to_vec();
        for (j, hi) in prod[phi..].iter().enumerate() {
            if hi.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&f.high_powers[j]) {
                if !r.is_zero() {
                    *o += hi * r;
                }
            }
        }
        Ok(Cyclotomic { n: self.n, c: out })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let phi = self.c.len();
        if phi == 1 {
            return Ok(Cyclotomic {
                n: self.n,
                c: vec![self.c[0].recip()],
            });
        }
        // Solve (mult-by-self) v = e_0 over Q.
        let n = self.n;
        let mut cols = Vec::with_capacity(phi);
        let mut basis = Self::one(n);
        let z = primitive_root(n)?;
        for _ in 0..phi {
            cols.push(&basis * self);
            basis = &basis * &z;
        }
        // augmented matrix rows: a[i][j] = cols[j].c[i]
        let mut a: Vec<Vec<Rational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|col| col.c[i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let p = (col..phi).find(|&r| !a[r][col].is_zero()).ok_or(Error::ZeroDivisor)?;
            a.swap(col, p);
            let pv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &pv;
            }
            for r in 0..phi {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for k in col..=phi {
                        let t = &f * &a[col][k];
                        a[r][k] -= t;
                    }
                }
            }
        }
        Ok(Cyclotomic {
            n,
            c: a.into_iter().map(|row| row[phi].clone()).collect(),
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Re-expresses the element at conductor `m` via `z_N = z_M^(M/N)`.
    pub fn lift(&self, m: u32) -> Result<Self> {
        lift_conductor(self, m)
    }

    /// Expresses the element at a smaller conductor `m`, if it lies in `Q(z_m)`.
    pub fn lower(&self, m: u32) -> Result<Self> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return Err(Error::InvalidEmbedding { from: m, to: self.n });
        }
        if m == self.n {
            return Ok(self.clone());
        }
        let phi_m = euler_phi(m);
        let images: Vec<Cyclotomic> = (0..phi_m)
            .map(|j| Cyclotomic::zeta_pow(m, j as i64).lift(self.n))
            .collect::<Result<_>>()?;
        // Solve sum_j x_j images[j] = self over Q.
        let phi = self.c.len();
        let mut a: Vec<Vec<Rational>> = (0..phi)
            .map(|i| {
                let mut row: Vec<Rational> = images.iter().map(|im| im.c[i].clone()).collect();
                row.push(self.c[i].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..phi_m {
            if let Some(p) = (r..phi).find(|&i| !a[i][col].is_zero()) {
                a.swap(r, p);
                let pv = a[r][col].recip();
                for x in a[r].iter_mut() {
                    *x *= &pv;
                }
                for i in 0..phi {
                    if i != r && !a[i][col].is_zero() {
                        let f = a[i][col].clone();
                        for k in 0..=phi_m {
                            let t = &f * &a[r][k];
                            a[i][k] -= t;
                        }
                    }
                }
                pivots.push(col);
                r += 1;
            }
        }
        if a[r..].iter().any(|row| !row[phi_m].is_zero()) {
            return Err(Error::NotInSubfield(m));
        }
        let mut out = vec![Rational::zero(); phi_m];
        for (i, &col) in pivots.iter().enumerate() {
            out[col] = a[i][phi_m].clone();
        }
        Ok(Cyclotomic { n: m, c: out })
    }
}

/// The class of `z_N` in the power basis.
pub fn primitive_root(n: u32) -> Result<Cyclotomic> {
    match n {
        0 => Err(Error::InvalidConductor(0)),
        1 => Ok(Cyclotomic::one(1)),
        2 => Ok(Cyclotomic::from_int(-1, 2)),
        _ => {
            let mut x = Cyclotomic::zero(n);
            x.c[1] = Rational::one();
            Ok(x)
        }
    }
}

/// Primitive `k`-th root of unity inside `Q(z_N)`; requires `k | N`.
pub fn root_of_unity(k: u64, n: u32) -> Result<Cyclotomic> {
    if k == 0 || !(n as u64).is_multiple_of(k) {
        return Err(Error::ConductorTooSmall {
            conductor: n,
            needed: k,
        });
    }
    Ok(Cyclotomic::zeta_pow(n, (n as u64 / k) as i64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(op: ArithOp, a: &Cyclotomic, b: &Cyclotomic) -> Result<Cyclotomic> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

pub fn lift_conductor(a: &Cyclotomic, m: u32) -> Result<Cyclotomic> {
    if m == 0 || !m.is_multiple_of(a.n) {
        return Err(Error::InvalidEmbedding { from: a.n, to: m });
    }
    if m == a.n {
        return Ok(a.clone());
    }
    let step = (m / a.n) as i64;
    let mut out = Cyclotomic::zero(m);
    for (j, c) in a.c.iter().enumerate() {
        if !c.is_zero() {
            out += &Cyclotomic::zeta_pow(m, j as i64 * step).scale(c);
        }
    }
    Ok(out)
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

macro_rules! binop {
    ($tr:ident, $f:ident, $try:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$try(rhs).expect("cyclotomic conductor mismatch")
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.n, rhs.n, "cyclotomic conductor mismatch");
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.n, rhs.n, "cyclotomic conductor mismatch");
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match j {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", abs)?;
                    }
                    write!(f, "z{}", self.n)?;
                    if j > 1 {
                        write!(f, "^{}", j)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [N={}]", self, self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    #[serde(rename = "N")]
    n: u32,
    c: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloJson {
            n: self.n,
            c: self.c.iter().map(|r| r.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CycloJson::deserialize(d)?;
        let coeffs = j
            .c
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Cyclotomic::from_coeffs(j.n, coeffs).map_err(serde::de::Error::custom)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

/// Parses sums like `1/2 - 3*i + z^5` into `Q(z_N)`: `z` is the primitive
/// `N`-th root, `i` needs `4 | N`.
pub fn parse_cyclotomic(s: &str, n: u32) -> Result<Cyclotomic> {
    let bad = || Error::Parse(format!("bad cyclotomic expression {s:?}"));
    let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err(bad());
    }
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in src.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut acc = Cyclotomic::zero(n);
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        let (coef, root) = match body.split_once('*') {
            Some((c, r)) => (parse_rational(c)?, Some(r)),
            None if body.starts_with('z') || body == "i" => (Rational::one(), Some(body)),
            None => (parse_rational(body)?, None),
        };
        let mut v = Cyclotomic::from_rational(if neg { -coef } else { coef }, n);
        if let Some(r) = root {
            let unit = if r == "i" {
                root_of_unity(4, n)?
            } else if r == "z" {
                Cyclotomic::zeta_pow(n, 1)
            } else if let Some(e) = r.strip_prefix("z^") {
                Cyclotomic::zeta_pow(n, e.parse::<i64>().map_err(|_| bad())?)
            } else {
                return Err(bad());
            };
            v = &v * &unit;
        }
        acc += &v;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let p = |n| {
            cyclotomic_polynomial(n)
                .into_iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(p(1), vec![-1, 1]);
        assert_eq!(p(2), vec![1, 1]);
        assert_eq!(p(4), vec![1, 0, 1]);
        assert_eq!(p(6), vec![1, -1, 1]);
        assert_eq!(p(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn primitive_roots() {
        assert!(primitive_root(1).unwrap().is_one());
        assert_eq!(primitive_root(2).unwrap(), Cyclotomic::from_int(-1, 2));
        let i = primitive_root(4).unwrap();
        assert_eq!(&i * &i, Cyclotomic::from_int(-1, 4));
        assert_eq!(primitive_root(0), Err(Error::InvalidConductor(0)));
        for n in [1u32, 2, 3, 4, 5, 6, 8, 12] {
            let z = primitive_root(n).unwrap();
            for d in 1..n {
                assert!(!z.pow(d as i64).unwrap().is_one(), "n={n} d={d}");
            }
            assert!(z.pow(n as i64).unwrap().is_one());
        }
    }

    #[test]
    fn arithmetic_examples() {
        let z3 = primitive_root(3).unwrap();
        let z3sq = &z3 * &z3;
        assert!((&z3 * &z3sq).is_one());
        assert_eq!(&z3 + &z3sq, Cyclotomic::from_int(-1, 3));
        let i = primitive_root(4).unwrap();
        let inv = cyc_arith(ArithOp::Div, &Cyclotomic::one(4), &i).unwrap();
        assert_eq!(inv, -&i);
        assert_eq!(inv, i.pow(3).unwrap());
        assert_eq!(
            cyc_arith(ArithOp::Div, &i, &Cyclotomic::zero(4)),
            Err(Error::ZeroDivisor)
        );
        assert_eq!(
            cyc_arith(ArithOp::Add, &i, &z3),
            Err(Error::ConductorMismatch(4, 3))
        );
    }

    #[test]
    fn lifting() {
        let m1 = Cyclotomic::from_int(-1, 2);
        assert_eq!(m1.lift(4).unwrap(), Cyclotomic::zeta_pow(4, 2));
        assert!(Cyclotomic::one(1).lift(6).unwrap().is_one());
        let z3 = primitive_root(3).unwrap();
        assert_eq!(z3.lift(6).unwrap(), Cyclotomic::zeta_pow(6, 2));
        assert_eq!(z3.lift(6).unwrap().lower(3).unwrap(), z3);
        assert!(matches!(z3.lift(4), Err(Error::InvalidEmbedding { .. })));
        let i = primitive_root(4).unwrap();
        assert_eq!(i.lower(2), Err(Error::NotInSubfield(2)));
    }

    #[test]
    fn expressions() {
        let i = primitive_root(4).unwrap();
        assert_eq!(parse_cyclotomic("i", 4).unwrap(), i);
        assert_eq!(parse_cyclotomic("1 - 2*i", 4).unwrap(), Cyclotomic::one(4) - i.scale(&rational(2, 1)));
        assert_eq!(parse_cyclotomic("-1/2", 1).unwrap(), Cyclotomic::from_rational(rational(-1, 2), 1));
        assert_eq!(parse_cyclotomic("z^3", 6).unwrap(), Cyclotomic::from_int(-1, 6));
        assert_eq!(parse_cyclotomic("z^-1", 4).unwrap(), -&i);
        assert!(parse_cyclotomic("i", 3).is_err());
        assert!(parse_cyclotomic("2*w", 3).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let x = Cyclotomic::from_coeffs(4, vec![rational(1, 2), rational(-3, 1)]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"N":4,"c":["1/2","-3"]}"#);
        let y: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        assert!(serde_json::from_str::<Cyclotomic>(r#"{"N":4,"c":["1"]}"#).is_err());
    }

    #[test]
    fn display() {
        let x = Cyclotomic::from_coeffs(4, vec![rational(1, 2), rational(-3, 1)]).unwrap();
        assert_eq!(x.to_string(), "1/2 - 3*z4");
    }
}
