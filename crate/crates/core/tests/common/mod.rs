#![allow(dead_code)]

use liecontract::contract::QuasiGrading;
use liecontract::harness::{target_algebra, Setup};
use liecontract::invariants::{act_derivation, invariant_basis, l_space, poisson, GrSide, Rep};
use liecontract::liealg::LieAlgebra;
use liecontract::poly::{monomials_of_degree, Polynomial, Space};
use liecontract::scalars::{euler_phi, rational, Cyclotomic};
use proptest::prelude::*;

pub const CONDUCTORS: [u32; 7] = [1, 2, 3, 4, 6, 8, 12];

pub fn cyclotomic(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-9i64..=9, 1i64..=4), euler_phi(n))
        .prop_map(move |cs| Cyclotomic::from_coeffs(n, cs.into_iter().map(|(a, b)| rational(a, b)).collect()).unwrap())
}

pub fn field_triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| (cyclotomic(n), cyclotomic(n), cyclotomic(n)))
}

pub fn field_axioms(a: &Cyclotomic, b: &Cyclotomic, c: &Cyclotomic) -> Result<(), String> {
    let e = |x: liecontract::Result<Cyclotomic>| x.map_err(|e| e.to_string());
    let n = a.conductor();
    if e(a.try_add(b))? != e(b.try_add(a))? {
        return Err("addition not commutative".into());
    }
    if e(a.try_mul(b))? != e(b.try_mul(a))? {
        return Err("multiplication not commutative".into());
    }
    if e(e(a.try_mul(b))?.try_mul(c))? != e(a.try_mul(&e(b.try_mul(c))?))? {
        return Err("multiplication not associative".into());
    }
    if e(a.try_mul(&e(b.try_add(c))?))? != e(e(a.try_mul(b))?.try_add(&e(a.try_mul(c))?))? {
        return Err("distributivity fails".into());
    }
    if !e(a.try_sub(a))?.is_zero() || e(a.try_mul(&Cyclotomic::one(n)))? != *a {
        return Err("identities fail".into());
    }
    if !a.is_zero() && !e(a.try_mul(&e(a.inv())?))?.is_one() {
        return Err("inverse fails".into());
    }
    Ok(())
}

/// The corpus algebras used by the polynomial property checks.
pub fn small_algebras() -> &'static [LieAlgebra] {
    static CELL: std::sync::OnceLock<Vec<LieAlgebra>> = std::sync::OnceLock::new();
    CELL.get_or_init(build_small_algebras)
}

fn build_small_algebras() -> Vec<LieAlgebra> {
    let sl2 = Setup::from_specs(&"sl2".parse().unwrap(), &"neg_transpose".parse().unwrap(), 1).unwrap();
    let sl3 = Setup::from_specs(&"sl3".parse().unwrap(), &"neg_transpose".parse().unwrap(), 1).unwrap();
    vec![
        sl2.algebra().clone(),
        target_algebra(&sl2, 1, "contraction").unwrap(),
        "sl2<2>".parse::<liecontract::corpus::AlgebraSpec>().unwrap().build().unwrap(),
        sl3.algebra().clone(),
        target_algebra(&sl3, 1, "contraction").unwrap(),
    ]
}

/// A random polynomial with up to `terms` monomials of degree at most `deg`.
pub fn polynomial(d: usize, n: u32, space: Space, deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let monos: Vec<_> = (0..=deg).flat_map(|m| monomials_of_degree(d, m)).collect();
    prop::collection::vec((prop::sample::select(monos), -5i64..=5), 0..=terms).prop_map(move |ts| {
        Polynomial::from_terms(d, space, n, ts.into_iter().map(|(m, c)| (m, Cyclotomic::from_int(c, n)))).unwrap()
    })
}

pub fn algebra_index() -> impl Strategy<Value = usize> {
    0..small_algebras().len()
}

fn err(e: liecontract::Error) -> String {
    e.to_string()
}

pub fn poisson_jacobi(g: &LieAlgebra, f: &Polynomial, h: &Polynomial, k: &Polynomial) -> Result<(), String> {
    let a = poisson(g, f, &poisson(g, h, k).map_err(err)?).map_err(err)?;
    let b = poisson(g, h, &poisson(g, k, f).map_err(err)?).map_err(err)?;
    let c = poisson(g, k, &poisson(g, f, h).map_err(err)?).map_err(err)?;
    if a.add(&b).and_then(|x| x.add(&c)).map_err(err)?.is_zero() {
        Ok(())
    } else {
        Err("Poisson bracket violates Jacobi".into())
    }
}

pub fn poisson_leibniz(g: &LieAlgebra, f: &Polynomial, h: &Polynomial, k: &Polynomial) -> Result<(), String> {
    let lhs = poisson(g, f, &h.mul(k).map_err(err)?).map_err(err)?;
    let rhs = poisson(g, f, h)
        .and_then(|x| x.mul(k))
        .and_then(|x| x.add(&h.mul(&poisson(g, f, k)?)?))
        .map_err(err)?;
    let anti = poisson(g, f, h).and_then(|x| x.add(&poisson(g, h, f)?)).map_err(err)?;
    if lhs != rhs {
        return Err("Poisson bracket violates Leibniz".into());
    }
    if !anti.is_zero() {
        return Err("Poisson bracket not antisymmetric".into());
    }
    Ok(())
}

pub fn derivation_product_rule(g: &LieAlgebra, rep: Rep, x: usize, f: &Polynomial, h: &Polynomial) -> Result<(), String> {
    let lhs = act_derivation(g, rep, x, &f.mul(h).map_err(err)?).map_err(err)?;
    let rhs = act_derivation(g, rep, x, f)
        .and_then(|a| a.mul(h))
        .and_then(|a| a.add(&f.mul(&act_derivation(g, rep, x, h)?)?))
        .map_err(err)?;
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("product rule fails for {rep:?} at basis element {x}"))
    }
}

/// Corpus quasi-gradings for the Poincare-equality check.
pub fn corpus_quasi_gradings() -> Vec<(String, QuasiGrading)> {
    let mut out = Vec::new();
    for (alg, theta) in [
        ("sl2", "neg_transpose"),
        ("sl3", "neg_transpose"),
        ("gl3", "torus:0,1,2/3"),
        ("sp4", "torus:1,0,2,3/4"),
        ("2*sl2", "shift"),
    ] {
        let s = Setup::from_specs(&alg.parse().unwrap(), &theta.parse().unwrap(), 1).unwrap();
        out.push((format!("{alg} {theta}"), QuasiGrading::from(&s.grading)));
    }
    let sl2 = Setup::from_specs(&"sl2".parse().unwrap(), &"neg_transpose".parse().unwrap(), 1).unwrap();
    out.push((
        "so2 + sl2 fixed points".into(),
        liecontract::contract::quasi_from_fixedpoints(&sl2.theta).unwrap(),
    ));
    out
}

/// `dim L(slice) = dim slice` for both sides and both representations.
pub fn poincare_equality(name: &str, q: &QuasiGrading, max_degree: u32) -> Result<(), String> {
    for rep in [Rep::Adjoint, Rep::Coadjoint] {
        for m in 0..=max_degree {
            let slice = invariant_basis(&q.algebra, rep, m, None).basis;
            for side in [GrSide::Bottom, GrSide::Top] {
                let l = l_space(&slice, q, side).map_err(err)?;
                if l.len() != slice.len() {
                    return Err(format!("{name}: {rep:?} degree {m} {side:?}: {} vs {}", l.len(), slice.len()));
                }
            }
        }
    }
    Ok(())
}
