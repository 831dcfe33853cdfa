//! Polynomial invariants of the adjoint and coadjoint representations.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::autos::PeriodicGrading;
use crate::contract::QuasiGrading;
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::linalg::{sparse_kernel, Matrix, SparseRow, Vector};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Space};
use crate::scalars::{rational, Cyclotomic, Rational};

pub const DEFAULT_MAX_DEGREE: u32 = 6;
pub const DEFAULT_MAX_DIM: usize = 12;
pub const DEFAULT_INDEX_TRIALS: usize = 5;
pub const DEFAULT_COORD_BOUND: i64 = 10;
const JACOBIAN_RETRIES: usize = 3;

/// Adjoint: functions on `q`. Coadjoint: elements of `S(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    Adjoint,
    Coadjoint,
}

impl Rep {
    pub fn space(self) -> Space {
        match self {
            Rep::Adjoint => Space::Fun,
            Rep::Coadjoint => Space::Sym,
        }
    }

    pub fn of_space(space: Space) -> Rep {
        match space {
            Space::Fun => Rep::Adjoint,
            Space::Sym => Rep::Coadjoint,
        }
    }
}

impl std::str::FromStr for Rep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjoint" | "ad" => Ok(Rep::Adjoint),
            "coadjoint" | "coad" => Ok(Rep::Coadjoint),
            _ => Err(Error::Parse(format!("unknown representation {s:?}"))),
        }
    }
}

/// Refuses invariant computations beyond the given size limits.
pub fn check_limits(g: &LieAlgebra, degree: u32, max_dim: usize, max_degree: u32) -> Result<()> {
    if g.dim() > max_dim {
        return Err(Error::Invalid(format!(
            "dimension {} exceeds the cap {max_dim}",
            g.dim()
        )));
    }
    if degree > max_degree {
        return Err(Error::Invalid(format!(
            "degree {degree} exceeds the cap {max_degree}"
        )));
    }
    Ok(())
}

// images[j] = the linear form D_a(var_j)
fn variable_images(g: &LieAlgebra, rep: Rep, a: usize) -> Vec<SparseRow> {
    let d = g.dim();
    let mut images: Vec<SparseRow> = vec![Vec::new(); d];
    match rep {
        Rep::Adjoint => {
            for i in 0..d {
                for (j, c) in g.basis_bracket(a, i) {
                    images[*j].push((i, -c));
                }
            }
        }
        Rep::Coadjoint => {
            for (i, img) in images.iter_mut().enumerate() {
                *img = g.basis_bracket(a, i).clone();
            }
        }
    }
    images
}

fn apply_derivation(f: &Polynomial, images: &[SparseRow]) -> Polynomial {
    let n = f.nvars();
    let mut out = Polynomial::zero(n, f.space(), f.conductor());
    for (m, c) in f.terms() {
        for (j, &e) in m.exps().iter().enumerate() {
            if e == 0 || images[j].is_empty() {
                continue;
            }
            let ce = c.scale(&rational(e as i64, 1));
            for (i, v) in &images[j] {
                let mut x = m.0.clone();
                x[j] -= 1;
                x[*i] += 1;
                out.add_term(Monomial(x), &ce * v);
            }
        }
    }
    out
}

fn check_space(g: &LieAlgebra, space: Space, f: &Polynomial) -> Result<()> {
    if f.space() != space {
        return Err(Error::SpaceMismatch);
    }
    if f.nvars() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: f.nvars(),
        });
    }
    if f.conductor() != g.conductor() {
        return Err(Error::ConductorMismatch(g.conductor(), f.conductor()));
    }
    Ok(())
}

/// Action of the basis element `e_x` on `F` as a derivation.
pub fn act_derivation(g: &LieAlgebra, rep: Rep, x: usize, f: &Polynomial) -> Result<Polynomial> {
    check_space(g, rep.space(), f)?;
    if x >= g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: x,
        });
    }
    Ok(apply_derivation(f, &variable_images(g, rep, x)))
}

/// True when every basis derivation kills `F`.
pub fn is_invariant(g: &LieAlgebra, f: &Polynomial) -> Result<bool> {
    let rep = Rep::of_space(f.space());
    for x in 0..g.dim() {
        if !act_derivation(g, rep, x, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBasis {
    pub degree: u32,
    pub rep: Rep,
    pub basis: Vec<Polynomial>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Echelon basis of the degree-`m` invariants of the acting basis elements.
pub fn invariant_basis(g: &LieAlgebra, rep: Rep, m: u32, acting: Option<&[usize]>) -> InvariantBasis {
    let d = g.dim();
    let n = g.conductor();
    let space = rep.space();
    let monos = monomials_of_degree(d, m);
    let index: HashMap<&[u32], usize> = monos
        .iter()
        .enumerate()
        .map(|(i, mo)| (mo.exps(), i))
        .collect();
    let all: Vec<usize> = (0..d).collect();
    let acting = acting.unwrap_or(&all);
    let nm = monos.len();
    let mut rows: Vec<SparseRow> = Vec::new();
    for &a in acting {
        let images = variable_images(g, rep, a);
        let mut by_row: HashMap<usize, SparseRow> = HashMap::new();
        let mut scratch = vec![0u32; d];
        for (u, mo) in monos.iter().enumerate() {
            for (j, &e) in mo.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                for (i, v) in &images[j] {
                    scratch.copy_from_slice(mo.exps());
                    scratch[j] -= 1;
                    scratch[*i] += 1;
                    let target = index[scratch.as_slice()];
                    let val = v.scale(&rational(e as i64, 1));
                    let row = by_row.entry(target).or_default();
                    match row.last_mut() {
                        Some((col, acc)) if *col == u => *acc += &val,
                        _ => row.push((u, val)),
                    }
                }
            }
        }
        let mut keyed: Vec<(usize, SparseRow)> = by_row.into_iter().collect();
        keyed.sort_by_key(|(k, _)| *k);
        for (_, mut r) in keyed {
            r.retain(|(_, c)| !c.is_zero());
            if !r.is_empty() {
                rows.push(r);
            }
        }
    }
    let kernel = sparse_kernel(rows, nm, n);
    let basis = kernel
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(d, space, n, v.into_iter().map(|(i, c)| (monos[i].clone(), c)))
                .expect("consistent kernel vector")
        })
        .collect();
    InvariantBasis {
        degree: m,
        rep,
        basis,
    }
}

/// Dimensions of the invariant slices in degrees `0..=max_degree`.
pub fn poincare(g: &LieAlgebra, rep: Rep, max_degree: u32) -> Vec<usize> {
    (0..=max_degree)
        .map(|m| invariant_basis(g, rep, m, None).dim())
        .collect()
}

fn check_grading(q: &QuasiGrading, f: &Polynomial) -> Result<Vec<usize>> {
    let tags = q.block_tags();
    if f.nvars() != tags.len() {
        return Err(Error::DimensionMismatch {
            expected: tags.len(),
            got: f.nvars(),
        });
    }
    Ok(tags)
}

fn monomial_gamma(tags: &[usize], m: &Monomial) -> usize {
    m.exps()
        .iter()
        .zip(tags)
        .map(|(&e, &b)| e as usize * b)
        .sum()
}

/// Splits `F` (in the adapted basis) into its Γ-homogeneous parts.
pub fn gamma_split(q: &QuasiGrading, f: &Polynomial) -> Result<BTreeMap<usize, Polynomial>> {
    let tags = check_grading(q, f)?;
    let mut parts: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (m, c) in f.terms() {
        parts
            .entry(monomial_gamma(&tags, m))
            .or_insert_with(|| Polynomial::zero(f.nvars(), f.space(), f.conductor()))
            .add_term(m.clone(), c.clone());
    }
    Ok(parts)
}

/// Minimal and maximal Γ-degree; `None` for the zero polynomial.
pub fn gamma_degree(q: &QuasiGrading, f: &Polynomial) -> Result<Option<(usize, usize)>> {
    let parts = gamma_split(q, f)?;
    Ok(match (parts.keys().next(), parts.keys().next_back()) {
        (Some(&a), Some(&b)) => Some((a, b)),
        _ => None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrSide {
    Bottom,
    Top,
}

impl std::str::FromStr for GrSide {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bottom" => Ok(GrSide::Bottom),
            "top" => Ok(GrSide::Top),
            _ => Err(Error::Parse(format!("unknown side {s:?}"))),
        }
    }
}

/// `gr_•F` (bottom) or `gr^•F` (top).
pub fn gr_component(f: &Polynomial, q: &QuasiGrading, which: GrSide) -> Result<Polynomial> {
    let mut parts = gamma_split(q, f)?;
    let part = match which {
        GrSide::Bottom => parts.pop_first(),
        GrSide::Top => parts.pop_last(),
    };
    part.map(|(_, p)| p).ok_or(Error::ZeroPolynomial)
}

/// `F_(t) = sum_j F_j t^j` as the list of `(j, F_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transport {
    pub terms: Vec<(usize, Polynomial)>,
}

impl Transport {
    pub fn evaluate(&self, t: &Cyclotomic) -> Result<Polynomial> {
        let mut out: Option<Polynomial> = None;
        for (j, p) in &self.terms {
            let s = p.scale(&t.pow(*j as i64)?);
            out = Some(match out {
                Some(o) => o.add(&s)?,
                None => s,
            });
        }
        out.ok_or(Error::ZeroPolynomial)
    }

    pub fn bottom(&self) -> Option<&Polynomial> {
        self.terms.first().map(|(_, p)| p)
    }

    pub fn top(&self) -> Option<&Polynomial> {
        self.terms.last().map(|(_, p)| p)
    }
}

pub fn transport(f: &Polynomial, q: &QuasiGrading) -> Result<Transport> {
    Ok(Transport {
        terms: gamma_split(q, f)?.into_iter().collect(),
    })
}

/// `F(c_t x)` by direct substitution `x_i -> t^{block(i)} x_i`.
pub fn transport_at(f: &Polynomial, q: &QuasiGrading, t: &Cyclotomic) -> Result<Polynomial> {
    let tags = check_grading(q, f)?;
    let d = tags.len();
    let mut m = Matrix::zeros(d, d, f.conductor());
    for (i, &b) in tags.iter().enumerate() {
        m.set(i, i, t.pow(b as i64)?);
    }
    f.linear_substitute(&m, f.space())
}

/// Rewrites `F` from the original basis of `q` into the adapted basis.
pub fn to_adapted_basis(f: &Polynomial, q: &QuasiGrading) -> Result<Polynomial> {
    let m = match f.space() {
        Space::Fun => q.base_change.clone(),
        Space::Sym => q.adapter()?.transpose(),
    };
    if m.rows() != f.nvars() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            got: f.nvars(),
        });
    }
    let lifted;
    let f = if f.conductor() != m.conductor() {
        lifted = f.lift(m.conductor())?;
        &lifted
    } else {
        f
    };
    f.linear_substitute(&m, f.space())
}

fn random_point(rng: &mut ChaCha8Rng, d: usize, bound: i64, n: u32) -> Vector {
    (0..d)
        .map(|_| Cyclotomic::from_int(rng.gen_range(-bound..=bound), n))
        .collect()
}

fn jacobian_at(polys: &[Polynomial], point: &[Cyclotomic], d: usize, n: u32) -> Matrix {
    let mut m = Matrix::zeros(polys.len(), d, n);
    for (r, p) in polys.iter().enumerate() {
        for i in 0..d {
            m.set(r, i, p.derivative(i).eval(point));
        }
    }
    m
}

/// Largest Jacobian rank found over a few seeded random integer points.
pub fn jacobian_rank(polys: &[Polynomial], seed: u64) -> usize {
    let Some(first) = polys.first() else { return 0 };
    let (d, n) = (first.nvars(), first.conductor());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..JACOBIAN_RETRIES {
        let pt = random_point(&mut rng, d, DEFAULT_COORD_BOUND, n);
        best = best.max(jacobian_at(polys, &pt, d, n).rank());
        if best == polys.len() {
            break;
        }
    }
    best
}

#[derive(Clone, Debug, Serialize)]
pub struct LFamily {
    pub polys: Vec<Polynomial>,
    pub invariant_in_contraction: Vec<bool>,
    pub jacobian_rank: usize,
    pub independent: bool,
}

impl LFamily {
    pub fn all_invariant(&self) -> bool {
        self.invariant_in_contraction.iter().all(|&b| b)
    }
}

/// gr components of source invariants (adapted basis) in the contraction `C_Γ(q)`.
pub fn l_family(gens: &[Polynomial], q: &QuasiGrading, which: GrSide, seed: u64) -> Result<LFamily> {
    let contracted = crate::contract::contract(q)?;
    let mut polys = Vec::with_capacity(gens.len());
    let mut flags = Vec::with_capacity(gens.len());
    for (i, f) in gens.iter().enumerate() {
        if !is_invariant(&q.algebra, f)? {
            return Err(Error::NotInvariant(format!("generator {i}")));
        }
        let g = gr_component(f, q, which)?;
        flags.push(is_invariant(&contracted, &g)?);
        polys.push(g);
    }
    let jacobian_rank = jacobian_rank(&polys, seed);
    Ok(LFamily {
        independent: jacobian_rank == polys.len(),
        polys,
        invariant_in_contraction: flags,
        jacobian_rank,
    })
}

/// Generators of the algebra spanned degreewise by `lifted` (each `lifted[m]`
/// an `L` space), checked against the contraction.
pub fn l_generators(lifted: &[Vec<Polynomial>], contracted: &LieAlgebra, seed: u64) -> Result<LFamily> {
    let Some(first) = lifted.iter().flatten().next() else {
        return Ok(LFamily { polys: Vec::new(), invariant_in_contraction: Vec::new(), jacobian_rank: 0, independent: true });
    };
    let polys = generators_of(lifted, first.nvars(), first.space(), first.conductor())?;
    let flags = polys.iter().map(|f| is_invariant(contracted, f)).collect::<Result<Vec<_>>>()?;
    let jacobian_rank = jacobian_rank(&polys, seed);
    Ok(LFamily {
        independent: jacobian_rank == polys.len(),
        polys,
        invariant_in_contraction: flags,
        jacobian_rank,
    })
}

/// `L_•` (bottom) or `L^•` (top) of the span of `basis`, via an echelon form
/// whose pivots follow the Γ-degree filtration; the leading parts stay independent.
pub fn l_space(basis: &[Polynomial], q: &QuasiGrading, which: GrSide) -> Result<Vec<Polynomial>> {
    let Some(first) = basis.first() else { return Ok(Vec::new()) };
    let tags = check_grading(q, first)?;
    let mut monos: Vec<Monomial> = basis
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    let key = |m: &Monomial| monomial_gamma(&tags, m);
    match which {
        GrSide::Bottom => monos.sort_by_key(|m| key(m)),
        GrSide::Top => monos.sort_by_key(|m| std::cmp::Reverse(key(m))),
    }
    let n = first.conductor();
    let rows: Vec<Vector> = basis
        .iter()
        .map(|p| monos.iter().map(|m| p.coeff(m)).collect())
        .collect();
    let (r, _) = Matrix::from_rows(rows, n)?.rref();
    let mut out = Vec::new();
    for i in 0..r.rows() {
        let terms: Vec<(Monomial, Cyclotomic)> = monos
            .iter()
            .zip(r.row(i))
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        if terms.is_empty() {
            continue;
        }
        let f = Polynomial::from_terms(first.nvars(), first.space(), n, terms)?;
        out.push(gr_component(&f, q, which)?);
    }
    Ok(out)
}

/// True when every polynomial of `fs` lies in the span of `span`.
pub fn spans_within(span: &[Polynomial], fs: &[Polynomial]) -> bool {
    fs.iter().all(|f| in_span(span, f))
}

/// Lie-Poisson bracket on `S(q)`.
pub fn poisson(g: &LieAlgebra, f: &Polynomial, h: &Polynomial) -> Result<Polynomial> {
    check_space(g, Space::Sym, f)?;
    check_space(g, Space::Sym, h)?;
    let d = g.dim();
    let n = g.conductor();
    let df: Vec<Polynomial> = (0..d).map(|i| f.derivative(i)).collect();
    let dh: Vec<Polynomial> = (0..d).map(|i| h.derivative(i)).collect();
    let mut out = Polynomial::zero(d, Space::Sym, n);
    for (i, j, row) in g.brackets() {
        let mut lin = Polynomial::zero(d, Space::Sym, n);
        for (k, c) in row {
            lin.add_term(Monomial::var(d, *k), c.clone());
        }
        let cross = df[i].mul(&dh[j])?.sub(&df[j].mul(&dh[i])?)?;
        if cross.is_zero() {
            continue;
        }
        out = out.add(&cross.mul(&lin)?)?;
    }
    Ok(out)
}

/// `B(ξ)_{ij} = ξ([e_i, e_j])`.
pub fn kirillov_matrix(g: &LieAlgebra, xi: &[Cyclotomic]) -> Matrix {
    let d = g.dim();
    let mut m = Matrix::zeros(d, d, g.conductor());
    for (i, j, row) in g.brackets() {
        let mut s = Cyclotomic::zero(g.conductor());
        for (k, c) in row {
            s += &(c * &xi[*k]);
        }
        m.set(j, i, -&s);
        m.set(i, j, s);
    }
    m
}

pub fn stabilizer_dim(g: &LieAlgebra, xi: &[Cyclotomic]) -> usize {
    g.dim() - kirillov_matrix(g, xi).rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub value: usize,
    pub trials: usize,
    pub seed: u64,
    pub coord_bound: i64,
    pub min_stabilizer_witness: Vector,
    pub parity_ok: bool,
    pub upper_bound_only: bool,
}

/// Minimal sampled stabiliser dimension in `q*`.
pub fn index(g: &LieAlgebra, trials: usize, seed: u64, coord_bound: i64) -> IndexReport {
    let d = g.dim();
    let n = g.conductor();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vector)> = None;
    for _ in 0..trials.max(1) {
        let xi = random_point(&mut rng, d, coord_bound, n);
        let s = stabilizer_dim(g, &xi);
        if best.as_ref().map(|b| s < b.0).unwrap_or(true) {
            best = Some((s, xi));
        }
    }
    let (value, witness) = best.expect("at least one trial");
    IndexReport {
        value,
        trials: trials.max(1),
        seed,
        coord_bound,
        min_stabilizer_witness: witness,
        parity_ok: (d - value).is_multiple_of(2),
        upper_bound_only: true,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BValue {
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    pub well_posed: bool,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// `b(q) = (dim q + ind q)/2`.
pub fn b_of(g: &LieAlgebra, index_value: usize) -> BValue {
    let s = g.dim() + index_value;
    BValue {
        value: rational(s as i64, 2),
        well_posed: s.is_multiple_of(2),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KostantVerdict {
    SumExceedsB,
    FreeGenerationCertified,
    SumBelowB,
    PreconditionFailed,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityCheck {
    pub points: usize,
    pub regular_points: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KostantReport {
    pub verdict: KostantVerdict,
    pub failures: Vec<String>,
    pub degrees: Vec<u32>,
    pub degree_sum: u32,
    pub index: usize,
    pub b: BValue,
    pub regularity: Option<RegularityCheck>,
}

/// Free-generation criterion for candidate coadjoint invariants.
pub fn kostant_check(g: &LieAlgebra, candidates: &[Polynomial], index_report: &IndexReport) -> Result<KostantReport> {
    let ind = index_report.value;
    let mut failures = Vec::new();
    let mut degrees = Vec::new();
    for (i, f) in candidates.iter().enumerate() {
        check_space(g, Space::Sym, f)?;
        if f.is_zero() {
            failures.push(format!("candidate {i} is zero"));
            continue;
        }
        if !f.is_homogeneous() {
            failures.push(format!("candidate {i} is not homogeneous"));
        }
        if !is_invariant(g, f)? {
            failures.push(format!("candidate {i} is not a coadjoint invariant"));
        }
        degrees.push(f.degree().unwrap_or(0));
    }
    if candidates.len() != ind {
        failures.push(format!(
            "{} candidates but the index is {ind}",
            candidates.len()
        ));
    }
    let rank = jacobian_rank(candidates, index_report.seed);
    if rank != candidates.len() {
        failures.push(format!("Jacobian rank {rank} < {}", candidates.len()));
    }
    let b = b_of(g, ind);
    if !b.well_posed {
        failures.push("dim + index is odd".into());
    }
    let degree_sum: u32 = degrees.iter().sum();
    let mut regularity = None;
    let verdict = if !failures.is_empty() {
        KostantVerdict::PreconditionFailed
    } else {
        let s = Rational::from_integer((degree_sum as i64).into());
        if s > b.value {
            KostantVerdict::SumExceedsB
        } else if s < b.value {
            KostantVerdict::SumBelowB
        } else {
            regularity = Some(regularity_criterion(g, candidates, index_report));
            KostantVerdict::FreeGenerationCertified
        }
    };
    Ok(KostantReport {
        verdict,
        failures,
        degrees,
        degree_sum,
        index: ind,
        b,
        regularity,
    })
}

// regular iff the differentials are independent, tested on the witness,
// seeded random points, the origin and the dual basis vectors
fn regularity_criterion(g: &LieAlgebra, fs: &[Polynomial], rep: &IndexReport) -> RegularityCheck {
    let d = g.dim();
    let n = g.conductor();
    let mut pts: Vec<Vector> = vec![rep.min_stabilizer_witness.clone(), vec![Cyclotomic::zero(n); d]];
    let mut rng = ChaCha8Rng::seed_from_u64(rep.seed.wrapping_add(1));
    for _ in 0..3 {
        pts.push(random_point(&mut rng, d, rep.coord_bound, n));
    }
    for i in 0..d {
        pts.push(crate::linalg::unit_vector(d, i, n));
    }
    let mut agree = true;
    let mut regular_points = 0;
    for p in &pts {
        let regular = stabilizer_dim(g, p) == rep.value;
        let independent = jacobian_at(fs, p, d, n).rank() == fs.len();
        regular_points += regular as usize;
        agree &= regular == independent;
    }
    RegularityCheck {
        points: pts.len(),
        regular_points,
        agree,
    }
}

/// Pullback of `F` along the inclusion of the column span of `basis`.
pub fn restrict(f: &Polynomial, basis: &Matrix) -> Result<Polynomial> {
    if basis.rows() != f.nvars() {
        return Err(Error::DimensionMismatch {
            expected: f.nvars(),
            got: basis.rows(),
        });
    }
    f.linear_substitute(basis, f.space())
}

/// Coefficients of `F(x + sξ)` in `s`, up to the last nonzero one.
pub fn argument_shift(f: &Polynomial, xi: &[Cyclotomic]) -> Result<Vec<Polynomial>> {
    if xi.len() != f.nvars() {
        return Err(Error::DimensionMismatch {
            expected: f.nvars(),
            got: xi.len(),
        });
    }
    let mut out = Vec::new();
    let mut cur = f.clone();
    let mut j = 0i64;
    while !cur.is_zero() {
        out.push(cur.clone());
        j += 1;
        let mut next = Polynomial::zero(f.nvars(), f.space(), f.conductor());
        for (i, x) in xi.iter().enumerate() {
            if !x.is_zero() {
                next = next.add(&cur.derivative(i).scale(x))?;
            }
        }
        cur = next.scale(&Cyclotomic::from_rational(rational(1, j), f.conductor()));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClubReport {
    pub k: usize,
    pub degree: u32,
    pub polydegrees: Vec<Vec<u32>>,
    pub clubs: Vec<Vec<u32>>,
    pub at_most_one: bool,
    pub club_in_top: Option<bool>,
}

fn is_club(p: &[u32], d: u32) -> bool {
    let k = p.len();
    if k < 2 {
        return false;
    }
    let last = p[k - 1];
    let head = &p[..k - 1];
    if last == d && head.iter().all(|&x| x == 0) {
        return true;
    }
    last + 1 == d && head.iter().filter(|&&x| x == 1).count() == 1 && head.iter().all(|&x| x <= 1)
}

/// Locates the summands of polydegree `(0,..,0,d)` or `(..,1,..,d-1)`.
pub fn clubsuit_summands(f: &Polynomial, gr: &PeriodicGrading) -> Result<ClubReport> {
    let q = QuasiGrading::from(gr);
    let tags = check_grading(&q, f)?;
    let k = gr.k;
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_homogeneous() {
        return Err(Error::Invalid("polynomial is not homogeneous".into()));
    }
    let mut residues = f.terms().map(|(m, _)| monomial_gamma(&tags, m) % k);
    let r0 = residues.next();
    if residues.any(|r| Some(r) != r0) {
        return Err(Error::NotEigenvector("Γ-degrees differ modulo k".into()));
    }
    let top = gamma_degree(&q, f)?.map(|x| x.1);
    let mut by_poly: BTreeMap<Vec<u32>, bool> = BTreeMap::new();
    for (m, _) in f.terms() {
        let mut p = vec![0u32; k];
        for (&e, &b) in m.exps().iter().zip(&tags) {
            p[b] += e;
        }
        let in_top = Some(monomial_gamma(&tags, m)) == top;
        let e = by_poly.entry(p).or_insert(true);
        *e &= in_top;
    }
    let clubs: Vec<Vec<u32>> = by_poly.keys().filter(|p| is_club(p, d)).cloned().collect();
    let club_in_top = clubs.first().map(|c| by_poly[c]);
    Ok(ClubReport {
        k,
        degree: d,
        at_most_one: clubs.len() <= 1,
        polydegrees: by_poly.keys().cloned().collect(),
        clubs,
        club_in_top,
    })
}

/// Homogeneous invariants of lowest degrees generating up to `max_degree`:
/// those not in the span of products of earlier ones.
pub fn basic_invariants(g: &LieAlgebra, rep: Rep, max_degree: u32) -> Result<Vec<Polynomial>> {
    let slices: Vec<Vec<Polynomial>> = (0..=max_degree).map(|m| invariant_basis(g, rep, m, None).basis).collect();
    generators_of(&slices, g.dim(), rep.space(), g.conductor())
}

/// Minimal homogeneous generators of the graded algebra whose degree `m` part
/// is spanned by `slices[m]`, read off degree by degree.
pub fn generators_of(slices: &[Vec<Polynomial>], d: usize, space: Space, n: u32) -> Result<Vec<Polynomial>> {
    let mut gens: Vec<Polynomial> = Vec::new();
    for (m, slice) in slices.iter().enumerate().skip(1) {
        if slice.is_empty() {
            continue;
        }
        let mut span = products_of_degree(&gens, m as u32, d, space, n)?;
        for f in slice {
            if !in_span(&span, f) {
                span.push(f.clone());
                gens.push(f.clone());
            }
        }
    }
    Ok(gens)
}

fn products_of_degree(gens: &[Polynomial], m: u32, d: usize, space: Space, n: u32) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    fn rec(
        gens: &[Polynomial],
        start: usize,
        left: u32,
        cur: Polynomial,
        out: &mut Vec<Polynomial>,
    ) -> Result<()> {
        if left == 0 {
            out.push(cur);
            return Ok(());
        }
        for i in start..gens.len() {
            let dg = gens[i].degree().unwrap_or(0);
            if dg == 0 || dg > left {
                continue;
            }
            rec(gens, i, left - dg, cur.mul(&gens[i])?, out)?;
        }
        Ok(())
    }
    rec(gens, 0, m, Polynomial::constant(Cyclotomic::one(n), d, space), &mut out)?;
    Ok(out)
}

fn in_span(span: &[Polynomial], f: &Polynomial) -> bool {
    if span.is_empty() {
        return f.is_zero();
    }
    let mut monos: Vec<Monomial> = span
        .iter()
        .chain(std::iter::once(f))
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    let n = f.conductor();
    let col = |p: &Polynomial| -> Vector { monos.iter().map(|m| p.coeff(m)).collect() };
    let a = Matrix::from_columns(&span.iter().map(col).collect::<Vec<_>>(), monos.len(), n);
    a.solve(&col(f)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autos::{eigenspace_grading, outer_involution, InvolutionVariant};
    use crate::contract::contract;
    use crate::liealg::{construct_classical, ClassicalKind, LieAlgebra};
    use crate::takiff::takiff;

    fn sl(n: usize) -> LieAlgebra {
        construct_classical(ClassicalKind::Sl, n).unwrap()
    }

    fn involution_grading(n: usize) -> QuasiGrading {
        let th = outer_involution(&sl(n), InvolutionVariant::NegTranspose)
            .unwrap()
            .lift_for_grading()
            .unwrap();
        QuasiGrading::from(&eigenspace_grading(&th).unwrap())
    }

    fn casimir(g: &LieAlgebra, rep: Rep) -> Polynomial {
        invariant_basis(g, rep, 2, None).basis.remove(0)
    }

    #[test]
    fn sl2_poincare_and_casimir() {
        let g = sl(2);
        assert_eq!(poincare(&g, Rep::Adjoint, 4), vec![1, 0, 1, 0, 1]);
        assert_eq!(poincare(&g, Rep::Coadjoint, 4), vec![1, 0, 1, 0, 1]);
        let c = casimir(&g, Rep::Adjoint);
        for x in 0..3 {
            assert!(act_derivation(&g, Rep::Adjoint, x, &c).unwrap().is_zero());
        }
        assert!(act_derivation(&g, Rep::Coadjoint, 0, &c).is_err());
    }

    #[test]
    fn sl3_poincare() {
        assert_eq!(poincare(&sl(3), Rep::Adjoint, 6), vec![1, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn abelian_everything_invariant() {
        let g = construct_classical(ClassicalKind::Gl, 1).unwrap();
        assert_eq!(poincare(&g, Rep::Adjoint, 2), vec![1, 1, 1]);
    }

    #[test]
    fn takiff_sl2_degree_two() {
        let t = takiff(&sl(2), 2).unwrap();
        assert_eq!(invariant_basis(&t.algebra, Rep::Adjoint, 2, None).dim(), 2);
    }

    #[test]
    fn poisson_on_generators() {
        let g = sl(2);
        let v = |i| Polynomial::var(i, 3, Space::Sym, 1);
        // basis h, e, f
        assert_eq!(poisson(&g, &v(1), &v(2)).unwrap(), v(0));
        let c = casimir(&g, Rep::Coadjoint);
        for i in 0..3 {
            assert!(poisson(&g, &c, &v(i)).unwrap().is_zero());
        }
        assert!(poisson(&g, &c, &c).unwrap().is_zero());
    }

    #[test]
    fn index_values() {
        let g = sl(2);
        let r = index(&g, 5, 7, 10);
        assert_eq!(r.value, 1);
        assert!(r.parity_ok);
        let t = takiff(&g, 2).unwrap();
        assert_eq!(index(&t.algebra, 5, 7, 10).value, 2);
        assert_eq!(b_of(&t.algebra, 2).value, rational(4, 1));
    }

    #[test]
    fn casimir_split_and_gr() {
        let q = involution_grading(2);
        let g = &q.algebra;
        let c = casimir(g, Rep::Adjoint);
        let parts = gamma_split(&q, &c).unwrap();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![0, 2]);
        let tr = transport(&c, &q).unwrap();
        let t = Cyclotomic::from_int(3, c.conductor());
        assert_eq!(tr.evaluate(&t).unwrap(), transport_at(&c, &q, &t).unwrap());
        assert_eq!(tr.evaluate(&Cyclotomic::one(c.conductor())).unwrap(), c);
        let cq = contract(&q).unwrap();
        let bottom = gr_component(&c, &q, GrSide::Bottom).unwrap();
        assert!(is_invariant(&cq, &bottom).unwrap());
        let cs = casimir(g, Rep::Coadjoint);
        let top = gr_component(&cs, &q, GrSide::Top).unwrap();
        assert!(is_invariant(&cq, &top).unwrap());
        assert_eq!(gr_component(&Polynomial::zero(3, Space::Fun, c.conductor()), &q, GrSide::Top), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sl3_l_family() {
        let q = involution_grading(3);
        let gens = basic_invariants(&q.algebra, Rep::Adjoint, 3).unwrap();
        assert_eq!(gens.iter().map(|f| f.degree().unwrap()).collect::<Vec<_>>(), vec![2, 3]);
        let fam = l_family(&gens, &q, GrSide::Bottom, 1).unwrap();
        assert!(fam.all_invariant());
        assert!(fam.independent);
        let c = &gens[0];
        let dep = vec![c.clone(), c.mul(c).unwrap()];
        assert_eq!(l_family(&dep, &q, GrSide::Bottom, 1).unwrap().jacobian_rank, 1);
        assert!(l_family(&[], &q, GrSide::Bottom, 1).unwrap().polys.is_empty());
    }

    #[test]
    fn kostant_on_sl2_and_contraction() {
        let g = sl(2);
        let ir = index(&g, 5, 3, 10);
        let c = casimir(&g, Rep::Coadjoint);
        let rep = kostant_check(&g, std::slice::from_ref(&c), &ir).unwrap();
        assert_eq!(rep.verdict, KostantVerdict::FreeGenerationCertified);
        assert!(rep.regularity.unwrap().agree);
        let sq = c.mul(&c).unwrap();
        assert_eq!(kostant_check(&g, &[sq], &ir).unwrap().verdict, KostantVerdict::SumExceedsB);

        let q = involution_grading(2);
        let cq = contract(&q).unwrap();
        let top = gr_component(&casimir(&q.algebra, Rep::Coadjoint), &q, GrSide::Top).unwrap();
        let ir = index(&cq, 5, 3, 10);
        assert_eq!(ir.value, 1);
        assert_eq!(b_of(&cq, 1).value, rational(2, 1));
        let rep = kostant_check(&cq, &[top], &ir).unwrap();
        assert_eq!(rep.verdict, KostantVerdict::FreeGenerationCertified);
    }

    #[test]
    fn restriction_and_shift() {
        let q = involution_grading(2);
        let c = casimir(&q.algebra, Rep::Adjoint);
        let g1: Vec<usize> = (0..3).filter(|&i| q.block_tags()[i] == 1).collect();
        let n = c.conductor();
        let cols: Vec<Vector> = g1.iter().map(|&i| crate::linalg::unit_vector(3, i, n)).collect();
        let r = restrict(&c, &Matrix::from_columns(&cols, 3, n)).unwrap();
        assert!(!r.is_zero() && r.degree() == Some(2));
        let zero = restrict(&c, &Matrix::zeros(3, 0, n)).unwrap();
        assert!(zero.is_zero());

        let g = sl(2);
        let cs = casimir(&g, Rep::Coadjoint);
        let xi: Vector = [1, 2, -1].iter().map(|&v| Cyclotomic::from_int(v, 1)).collect();
        let fam = argument_shift(&cs, &xi).unwrap();
        assert_eq!(fam.len(), 3);
        assert!(fam[2].degree() == Some(0));
        assert!(poisson(&g, &fam[0], &fam[1]).unwrap().is_zero());
        assert_eq!(argument_shift(&cs, &[Cyclotomic::zero(1), Cyclotomic::zero(1), Cyclotomic::zero(1)]).unwrap().len(), 1);
    }

    #[test]
    fn club_for_sl2_casimir() {
        let th = outer_involution(&sl(2), InvolutionVariant::NegTranspose)
            .unwrap()
            .lift_for_grading()
            .unwrap();
        let gr = eigenspace_grading(&th).unwrap();
        let cs = casimir(&gr.algebra, Rep::Coadjoint);
        let rep = clubsuit_summands(&cs, &gr).unwrap();
        assert_eq!(rep.clubs.len(), 1);
        assert_eq!(rep.club_in_top, Some(true));
    }
}
