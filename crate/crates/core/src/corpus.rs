//! Textual and JSON descriptions of algebras, automorphisms and witnesses.
//!
//! Algebra strings: `sl3`, `sp4`, `gl4`, `so4`; `X<m>` for the Takiff algebra
//! of level `m`; `n*X` for `n` copies. Automorphism strings: `id`,
//! `neg_transpose`, `neg_sympl_transpose`, `conj_by_reflection`,
//! `torus:w1,w2,.../k`, `shift`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use serde_json::Value;

use crate::autos::{cyclic_shift_on, inner_from_torus, outer_involution, Automorphism, InvolutionVariant};
use crate::error::{Error, Result};
use crate::liealg::{construct_classical, copies, ClassicalKind, LieAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::scalars::{parse_cyclotomic, Cyclotomic};
use crate::takiff::takiff;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Classical { kind: ClassicalKind, size: usize },
    Takiff { base: Box<AlgebraSpec>, m: usize },
    Copies { base: Box<AlgebraSpec>, n: usize },
    Inline(Box<LieAlgebra>),
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<LieAlgebra> {
        match self {
            AlgebraSpec::Classical { kind, size } => construct_classical(*kind, *size),
            AlgebraSpec::Takiff { base, m } => Ok(takiff(&base.build()?, *m)?.algebra),
            AlgebraSpec::Copies { base, n } => copies(&base.build()?, *n),
            AlgebraSpec::Inline(g) => Ok((**g).clone()),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(s) = v.as_str() {
            return s.parse();
        }
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("algebra: missing {k:?}")));
        let int = |k: &str| -> Result<usize> {
            field(k)?
                .as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("algebra: {k:?} must be a nonnegative integer")))
        };
        let kind = field("kind")?.as_str().unwrap_or_default();
        match kind {
            "classical" => Ok(AlgebraSpec::Classical {
                kind: field("family")?.as_str().unwrap_or_default().parse()?,
                size: int("size")?,
            }),
            "takiff" => Ok(AlgebraSpec::Takiff {
                base: Box::new(Self::from_json(field("base")?)?),
                m: int("m")?,
            }),
            "copies" => Ok(AlgebraSpec::Copies {
                base: Box::new(Self::from_json(field("base")?)?),
                n: int("n")?,
            }),
            "inline" => {
                let g: LieAlgebra = serde_json::from_value(field("algebra")?.clone())
                    .map_err(|e| Error::Parse(e.to_string()))?;
                Ok(AlgebraSpec::Inline(Box::new(g)))
            }
            other => Err(Error::Parse(format!("unknown algebra kind {other:?}"))),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((n, rest)) = s.split_once('*') {
            let n = n.trim().parse().map_err(|_| Error::Parse(format!("bad copy count in {s:?}")))?;
            return Ok(AlgebraSpec::Copies {
                base: Box::new(rest.parse()?),
                n,
            });
        }
        if let Some(head) = s.strip_suffix('>') {
            let (base, m) = head
                .rsplit_once('<')
                .ok_or_else(|| Error::Parse(format!("bad Takiff level in {s:?}")))?;
            let m = m.trim().parse().map_err(|_| Error::Parse(format!("bad Takiff level in {s:?}")))?;
            return Ok(AlgebraSpec::Takiff {
                base: Box::new(base.parse()?),
                m,
            });
        }
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("bad algebra {s:?}")))?;
        let (kind, size) = s.split_at(split);
        Ok(AlgebraSpec::Classical {
            kind: kind.parse()?,
            size: size.parse().map_err(|_| Error::Parse(format!("bad algebra {s:?}")))?,
        })
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Classical { kind, size } => {
                let k = match kind {
                    ClassicalKind::Gl => "gl",
                    ClassicalKind::Sl => "sl",
                    ClassicalKind::So => "so",
                    ClassicalKind::Sp => "sp",
                };
                write!(f, "{k}{size}")
            }
            AlgebraSpec::Takiff { base, m } => write!(f, "{base}<{m}>"),
            AlgebraSpec::Copies { base, n } => write!(f, "{n}*{base}"),
            AlgebraSpec::Inline(g) => write!(f, "inline({})", g.dim()),
        }
    }
}

impl Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThetaSpec {
    Identity,
    Involution(InvolutionVariant),
    Torus { weights: Vec<i64>, order: usize },
    Shift,
    Matrix { matrix: Value },
}

impl ThetaSpec {
    pub fn build(&self, g: &LieAlgebra) -> Result<Automorphism> {
        match self {
            ThetaSpec::Identity => Ok(Automorphism::identity(Arc::new(g.clone()))),
            ThetaSpec::Involution(v) => outer_involution(g, *v),
            ThetaSpec::Torus { weights, order } => inner_from_torus(g, weights, *order),
            ThetaSpec::Shift => cyclic_shift_on(g),
            ThetaSpec::Matrix { matrix } => {
                let m = parse_matrix(matrix, g.conductor())?;
                Automorphism::new(Arc::new(g.clone()), m)
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(s) = v.as_str() {
            return s.parse();
        }
        let kind = v.get("kind").and_then(Value::as_str).unwrap_or_default();
        match kind {
            "identity" => Ok(ThetaSpec::Identity),
            "involution" => Ok(ThetaSpec::Involution(
                v.get("variant")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::Parse("involution: missing \"variant\"".into()))?
                    .parse()?,
            )),
            "torus" => {
                let weights = v
                    .get("weights")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("torus: missing \"weights\"".into()))?
                    .iter()
                    .map(|w| w.as_i64().ok_or_else(|| Error::Parse("torus weight".into())))
                    .collect::<Result<_>>()?;
                let order = v
                    .get("order")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("torus: missing \"order\"".into()))?;
                Ok(ThetaSpec::Torus {
                    weights,
                    order: order as usize,
                })
            }
            "shift" => Ok(ThetaSpec::Shift),
            "matrix" => Ok(ThetaSpec::Matrix {
                matrix: v
                    .get("matrix")
                    .cloned()
                    .ok_or_else(|| Error::Parse("matrix: missing \"matrix\"".into()))?,
            }),
            other => Err(Error::Parse(format!("unknown automorphism kind {other:?}"))),
        }
    }
}

impl FromStr for ThetaSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "id" | "identity" => return Ok(ThetaSpec::Identity),
            "shift" => return Ok(ThetaSpec::Shift),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("torus:") {
            let (w, k) = rest
                .split_once('/')
                .ok_or_else(|| Error::Parse(format!("torus needs weights/order: {s:?}")))?;
            let weights = w
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad weight {x:?}"))))
                .collect::<Result<_>>()?;
            let order = k.trim().parse().map_err(|_| Error::Parse(format!("bad order {k:?}")))?;
            return Ok(ThetaSpec::Torus { weights, order });
        }
        Ok(ThetaSpec::Involution(s.parse()?))
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThetaSpec::Identity => write!(f, "id"),
            ThetaSpec::Involution(v) => write!(
                f,
                "{}",
                serde_json::to_value(v).ok().and_then(|x| x.as_str().map(String::from)).unwrap_or_default()
            ),
            ThetaSpec::Torus { weights, order } => {
                let w: Vec<String> = weights.iter().map(|x| x.to_string()).collect();
                write!(f, "torus:{}/{order}", w.join(","))
            }
            ThetaSpec::Shift => write!(f, "shift"),
            ThetaSpec::Matrix { .. } => write!(f, "matrix"),
        }
    }
}

impl Serialize for ThetaSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A scalar given as a JSON integer, an expression string, or a cyclotomic
/// object `{"N", "c"}`.
pub fn parse_scalar(v: &Value, n: u32) -> Result<Cyclotomic> {
    match v {
        Value::Number(x) => x
            .as_i64()
            .map(|i| Cyclotomic::from_int(i, n))
            .ok_or_else(|| Error::Parse(format!("non-integer number {x}: use a string like \"1/2\""))),
        Value::String(s) => parse_cyclotomic(s, n),
        Value::Object(_) => {
            let c: Cyclotomic = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            c.lift(n)
        }
        _ => Err(Error::Parse(format!("bad scalar {v}"))),
    }
}

pub fn parse_vector(v: &Value, n: u32) -> Result<Vector> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array of scalars".into()))?
        .iter()
        .map(|x| parse_scalar(x, n))
        .collect()
}

pub fn parse_matrix(v: &Value, n: u32) -> Result<Matrix> {
    let rows: Vec<Vector> = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of rows".into()))?
        .iter()
        .map(|r| parse_vector(r, n))
        .collect::<Result<_>>()?;
    Matrix::from_rows(rows, n)
}

/// An element of `g`: `{"matrix": rows}` in the defining representation, or
/// `{"vector": coords}` / a bare coordinate array in the basis of `g`.
pub fn parse_element(g: &LieAlgebra, v: &Value) -> Result<Vector> {
    let n = g.conductor();
    if let Some(m) = v.get("matrix") {
        let real = g.realization().ok_or(Error::NotRealized)?;
        let m = parse_matrix(m, n)?;
        return real
            .coords(&m.lift(real.conductor())?)
            .ok_or_else(|| Error::Invalid("matrix is not in the algebra".into()));
    }
    let coords = v.get("vector").unwrap_or(v);
    let x = parse_vector(coords, n)?;
    if x.len() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: x.len(),
        });
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn algebra_strings() {
        assert_eq!("sl3".parse::<AlgebraSpec>().unwrap().build().unwrap().dim(), 8);
        assert_eq!("sl2<2>".parse::<AlgebraSpec>().unwrap().build().unwrap().dim(), 6);
        assert_eq!("2*sl2".parse::<AlgebraSpec>().unwrap().build().unwrap().dim(), 6);
        for s in ["sp4", "2*sl2<3>", "gl4"] {
            assert_eq!(s.parse::<AlgebraSpec>().unwrap().to_string(), s);
        }
        assert!("xx3".parse::<AlgebraSpec>().is_err());
        let j = json!({"kind": "takiff", "base": "sl2", "m": 3});
        assert_eq!(AlgebraSpec::from_json(&j).unwrap().build().unwrap().dim(), 9);
    }

    #[test]
    fn theta_strings() {
        let g = construct_classical(ClassicalKind::Sp, 4).unwrap();
        let t: ThetaSpec = "torus:1,0,2,3/4".parse().unwrap();
        assert_eq!(t.build(&g).unwrap().order(), 4);
        assert_eq!(t.to_string(), "torus:1,0,2,3/4");
        let s: ThetaSpec = "neg_transpose".parse().unwrap();
        assert_eq!(s.to_string(), "neg_transpose");
        let two = copies(&construct_classical(ClassicalKind::Sl, 2).unwrap(), 2).unwrap();
        assert_eq!(ThetaSpec::Shift.build(&two).unwrap().order(), 2);
    }

    #[test]
    fn elements() {
        let g = construct_classical(ClassicalKind::Sl, 2).unwrap().lift(4).unwrap();
        let x = parse_element(&g, &json!({"matrix": [[1, "i"], ["i", -1]]})).unwrap();
        assert_eq!(x.len(), 3);
        assert!(parse_element(&g, &json!({"matrix": [[1, 0], [0, 1]]})).is_err());
        assert_eq!(parse_element(&g, &json!([0, 1, 0])).unwrap()[1], Cyclotomic::one(4));
    }
}
