//! Regularity checks, end-to-end theorem pipelines and scenario files.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::autos::{eigenspace_grading, extend_to_copies, Automorphism, PeriodicGrading};
use crate::contract::{
    contract, lift_for_copies, quasi_from_grading, tower_vs_copies_contraction, tower_vs_cyclic_contraction,
    tower_vs_fixedpoint_contraction, tower_vs_hat_fixed, Comparison, QuasiGrading,
};
use crate::corpus::{parse_element, AlgebraSpec, ThetaSpec};
use crate::error::{Error, Result};
use crate::invariants::{
    basic_invariants, index, invariant_basis, is_invariant, kostant_check, l_family, l_generators, LFamily, l_space, poincare, restrict,
    spans_within, GrSide, KostantVerdict, Rep, DEFAULT_COORD_BOUND, DEFAULT_INDEX_TRIALS, DEFAULT_MAX_DIM,
};
use crate::liealg::{
    centralizer, compare_structure, coxeter_number, element_type, invariant_form, ElementType, FormSource, LieAlgebra,
};
use crate::linalg::{Matrix, Vector};
use crate::poly::{Monomial, Polynomial};
use crate::scalars::{lcm, Cyclotomic};
use crate::takiff::lift_automorphism;

pub const DEFAULT_S_TRIALS: usize = 20;

/// A periodic automorphism together with its eigenspace grading.
#[derive(Clone, Debug)]
pub struct Setup {
    pub theta: Automorphism,
    pub grading: PeriodicGrading,
    pub rank: usize,
}

impl Setup {
    /// Lifts `theta` to a conductor divisible by `conductor` and `|theta|`.
    pub fn new(theta: &Automorphism, conductor: u32) -> Result<Self> {
        let n = lcm(lcm(theta.conductor(), conductor.max(1)), theta.order() as u32);
        let theta = theta.lift(n)?;
        let grading = eigenspace_grading(&theta)?;
        let g = theta.algebra();
        let rank = match g.rank() {
            Some(r) => r,
            None => index(g, DEFAULT_INDEX_TRIALS, 0, DEFAULT_COORD_BOUND).value,
        };
        Ok(Setup { theta, grading, rank })
    }

    pub fn from_specs(algebra: &AlgebraSpec, theta: &ThetaSpec, conductor: u32) -> Result<Self> {
        let g = algebra.build()?;
        let g = g.lift(lcm(g.conductor(), conductor.max(1)))?;
        Setup::new(&theta.build(&g)?, conductor)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.theta.algebra()
    }

    pub fn k(&self) -> usize {
        self.grading.k
    }

    /// Block `i mod k` as a subspace of the original algebra.
    pub fn block(&self, i: usize) -> crate::linalg::Subspace {
        self.grading.component(i % self.k())
    }
}

/// Membership in block `block`, element type and regularity, itemized.
fn witness_failures(s: &Setup, x: &[Cyclotomic], block: usize, want: ElementType) -> Result<Vec<String>> {
    let g = s.algebra();
    let mut out = Vec::new();
    if !s.block(block).contains(x) {
        out.push(format!("not in g{}", block % s.k()));
    }
    let t = element_type(g, x)?;
    if t != want {
        out.push(format!("element type is {t:?}, wanted {want:?}"));
    }
    let c = centralizer(g, x)?.dim();
    if c != s.rank {
        out.push(format!("centralizer dimension {c} differs from the rank {}", s.rank));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SRegular {
    Yes { witness: Vector },
    Unknown { reason: String },
}

/// Regular semisimple elements in `g_1`: a given witness is checked, otherwise
/// seeded random elements of `g_1` are tried.
pub fn check_s_regular(s: &Setup, witness: Option<&Vector>, trials: usize, seed: u64) -> Result<SRegular> {
    if s.k() == 1 {
        return Ok(SRegular::Unknown {
            reason: "vacuous for k = 1".into(),
        });
    }
    if let Some(x) = witness {
        let f = witness_failures(s, x, 1, ElementType::Semisimple)?;
        return Ok(if f.is_empty() {
            SRegular::Yes { witness: x.clone() }
        } else {
            SRegular::Unknown { reason: f.join("; ") }
        });
    }
    let g1 = s.block(1);
    if g1.dim() == 0 {
        return Ok(SRegular::Unknown {
            reason: "g1 = 0".into(),
        });
    }
    let n = s.algebra().conductor();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut x = vec![Cyclotomic::zero(n); s.algebra().dim()];
        for b in g1.basis() {
            let c = Cyclotomic::from_int(rng.gen_range(-DEFAULT_COORD_BOUND..=DEFAULT_COORD_BOUND), n);
            crate::linalg::add_scaled(&mut x, &c, b);
        }
        if witness_failures(s, &x, 1, ElementType::Semisimple)?.is_empty() {
            return Ok(SRegular::Yes { witness: x });
        }
    }
    Ok(SRegular::Unknown {
        reason: format!("no regular semisimple element in {trials} samples"),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum NRegular {
    Yes { witness: Vector },
    No { failures: Vec<String> },
}

/// A regular nilpotent witness in block `block` (1 for N-regularity, 0 for
/// the `g_0 ∩ O^reg` hypothesis).
pub fn check_nilpotent_witness(s: &Setup, witness: &Vector, block: usize) -> Result<NRegular> {
    let f = witness_failures(s, witness, block, ElementType::Nilpotent)?;
    Ok(if f.is_empty() {
        NRegular::Yes {
            witness: witness.clone(),
        }
    } else {
        NRegular::No { failures: f }
    })
}

pub fn check_n_regular(s: &Setup, witness: &Vector) -> Result<NRegular> {
    check_nilpotent_witness(s, witness, 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VeryNVerdict {
    CertifiedViaSufficiency,
    WitnessOnly,
    NotCertified,
}

#[derive(Clone, Debug, Serialize)]
pub struct VeryNReport {
    pub verdict: VeryNVerdict,
    pub path: Option<String>,
    pub n_regular: bool,
    pub restriction_nonzero: Option<bool>,
    pub g0_semisimple: bool,
    pub sl_condition: bool,
    pub locally_free: bool,
    pub notes: Vec<String>,
}

/// Killing form of `g_0` nondegenerate.
pub fn g0_semisimple(s: &Setup) -> Result<bool> {
    let g0 = s.algebra().restrict_to(&s.grading.component_basis(0), Vec::new())?;
    Ok(invariant_form(&g0, FormSource::Killing)?.is_nondegenerate())
}

/// `tr(ad x |g_1) = 0` for every basis element `x` of `g_0`.
pub fn sl_condition(s: &Setup) -> bool {
    let gr = &s.grading;
    let alg = &gr.algebra;
    if gr.k == 1 {
        return true;
    }
    gr.blocks[0].iter().all(|&x| {
        let mut tr = Cyclotomic::zero(alg.conductor());
        for &a in &gr.blocks[1] {
            for (t, c) in alg.basis_bracket(x, a) {
                if *t == a {
                    tr += c;
                }
            }
        }
        tr.is_zero()
    })
}

/// Generic stabilizer of `g_0` on `g_1` trivial: `x -> [x, v]` injective on
/// `g_0` for some seeded random `v` in `g_1`.
pub fn locally_free(s: &Setup, seed: u64) -> bool {
    let gr = &s.grading;
    let alg = &gr.algebra;
    let n = alg.conductor();
    let d = alg.dim();
    if gr.k == 1 {
        return gr.blocks[0].is_empty();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        let mut v = vec![Cyclotomic::zero(n); d];
        for &a in &gr.blocks[1] {
            v[a] = Cyclotomic::from_int(rng.gen_range(-DEFAULT_COORD_BOUND..=DEFAULT_COORD_BOUND), n);
        }
        let cols: Vec<Vector> = gr.blocks[0]
            .iter()
            .map(|&x| alg.bracket(&alg.basis_vector(x), &v).expect("dimensions"))
            .collect();
        if Matrix::from_columns(&cols, d, n).rank() == gr.blocks[0].len() {
            return true;
        }
    }
    false
}

/// Restriction of the top-degree basic invariant to `g_1` is nonzero.
pub fn top_invariant_restriction(s: &Setup) -> Result<Option<bool>> {
    let g = s.algebra();
    let Some(real) = g.realization() else { return Ok(None) };
    let Ok(c) = coxeter_number(real.kind(), real.size()) else { return Ok(None) };
    let gens = basic_invariants(g, Rep::Adjoint, c as u32)?;
    let Some(f) = gens.iter().find(|f| f.degree() == Some(c as u32)) else { return Ok(None) };
    let r = restrict(f, &s.block_basis(1))?;
    Ok(Some(!r.is_zero()))
}

impl Setup {
    fn block_basis(&self, i: usize) -> Matrix {
        self.grading.component_basis(i % self.k())
    }
}

/// Sufficient conditions for very N-regularity; never returns a negative.
pub fn check_very_n_sufficient(s: &Setup, n_regular: bool, seed: u64) -> Result<VeryNReport> {
    let restriction_nonzero = top_invariant_restriction(s)?;
    let semisimple = g0_semisimple(s)?;
    let slc = sl_condition(s);
    let free = locally_free(s, seed);
    let mut notes = Vec::new();
    let mut path = None;
    if !n_regular {
        notes.push("N-regularity not certified".into());
    }
    if restriction_nonzero != Some(true) {
        notes.push("top basic invariant restriction to g1 not shown nonzero".into());
    }
    let hyp = n_regular && restriction_nonzero == Some(true);
    if hyp && semisimple {
        path = Some("g0 semisimple".to_string());
    } else if hyp && slc && free {
        path = Some("G0 in SL(g1), locally free".to_string());
    }
    if !semisimple && !slc {
        notes.push("the SL(g1) trace condition fails".into());
    }
    if !semisimple && slc && !free {
        notes.push("the action of g0 on g1 is not locally free".into());
    }
    let verdict = if path.is_some() {
        VeryNVerdict::CertifiedViaSufficiency
    } else {
        notes.push("not certified very-N-regular".into());
        VeryNVerdict::NotCertified
    };
    Ok(VeryNReport {
        verdict,
        path,
        n_regular,
        restriction_nonzero,
        g0_semisimple: semisimple,
        sl_condition: slc,
        locally_free: free,
        notes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub verdict: Verdict,
    pub series: Vec<usize>,
    pub predicted: Vec<usize>,
    pub per_degree: Vec<bool>,
    pub generator_degrees: Vec<u32>,
    pub family_size: usize,
    pub family_independent: bool,
    pub family_invariant: bool,
    pub expected_krull: usize,
    pub routes_agree: bool,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kostant: Option<crate::invariants::KostantReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

impl TheoremReport {
    fn not_met(note: String) -> Self {
        TheoremReport {
            verdict: Verdict::HypothesisNotMet,
            series: Vec::new(),
            predicted: Vec::new(),
            per_degree: Vec::new(),
            generator_degrees: Vec::new(),
            family_size: 0,
            family_independent: false,
            family_invariant: false,
            expected_krull: 0,
            routes_agree: false,
            notes: vec![note],
            kostant: None,
            index: None,
        }
    }
}

/// Hilbert series of a free commutative algebra on the given degrees.
pub fn free_series(degrees: &[u32], max_degree: u32) -> Vec<usize> {
    let mut s = vec![0usize; max_degree as usize + 1];
    s[0] = 1;
    for &d in degrees {
        let d = d as usize;
        if d == 0 {
            continue;
        }
        for m in d..s.len() {
            s[m] += s[m - d];
        }
    }
    s
}

/// Reindexes `f` into `total` variables starting at `offset`.
pub fn shift_vars(f: &Polynomial, offset: usize, total: usize) -> Polynomial {
    let terms = f.terms().map(|(m, c)| {
        let mut e = vec![0u32; total];
        e[offset..offset + m.exps().len()].copy_from_slice(m.exps());
        (Monomial(e), c.clone())
    });
    Polynomial::from_terms(total, f.space(), f.conductor(), terms).expect("shape")
}

// the composite fixed-points-of-hat -> contraction, both built from the tower
fn routes_agree(hat: &Comparison, other: &Comparison) -> Result<bool> {
    if !hat.holds()? || !other.holds()? {
        return Ok(false);
    }
    let m = other.map.mul(&hat.map.inverse()?)?;
    compare_structure(&hat.target, &other.target, &m)
}

struct Pipeline {
    q: QuasiGrading,
    contracted: LieAlgebra,
    gens: Vec<Polynomial>,
    source_degrees: Vec<u32>,
    routes_agree: bool,
}

fn copies_pipeline(s: &Setup, n: usize, rep: Rep, max_degree: u32, plus: bool) -> Result<Pipeline> {
    let theta = lift_for_copies(&s.theta, n)?;
    let k = theta.order();
    let g = theta.algebra().clone();
    let d = g.dim();
    let tt = extend_to_copies(&theta, n)?;
    let big = eigenspace_grading(&tt)?;
    let (q, other, hat_levels) = if plus {
        (
            quasi_from_grading(tt.algebra(), &big)?,
            tower_vs_fixedpoint_contraction(&theta, n)?,
            n * k + 1,
        )
    } else {
        (QuasiGrading::from(&big), tower_vs_copies_contraction(&theta, n)?, n * k)
    };
    let hat = tower_vs_hat_fixed(&theta, hat_levels)?;
    let agree = routes_agree(&hat, &other)?;
    let contracted = contract(&q)?;
    let total = q.algebra.dim();
    let base = basic_invariants(&g, rep, max_degree)?;
    let mut gens = Vec::new();
    let mut degrees = Vec::new();
    let offset0 = if plus { big.blocks[0].len() } else { 0 };
    for p in 0..n {
        for f in &base {
            gens.push(shift_vars(f, offset0 + p * d, total));
            degrees.push(f.degree().unwrap_or(0));
        }
    }
    if plus {
        let q0 = tt.algebra().restrict_to(&big.component_basis(0), Vec::new())?;
        for f in basic_invariants(&q0, rep, max_degree)? {
            degrees.push(f.degree().unwrap_or(0));
            gens.push(shift_vars(&f, 0, total));
        }
    }
    let gens = gens
        .iter()
        .map(|f| crate::invariants::to_adapted_basis(f, &q))
        .collect::<Result<Vec<_>>>()?;
    degrees.sort_unstable();
    Ok(Pipeline {
        q,
        contracted,
        gens,
        source_degrees: degrees,
        routes_agree: agree,
    })
}

fn run_pipeline(p: &Pipeline, rep: Rep, side: GrSide, max_degree: u32, expected_krull: usize, seed: u64) -> Result<(TheoremReport, LFamily)> {
    if p.contracted.dim() > DEFAULT_MAX_DIM {
        return Err(Error::Invalid(format!(
            "contraction dimension {} exceeds the cap {DEFAULT_MAX_DIM}",
            p.contracted.dim()
        )));
    }
    let series = poincare(&p.contracted, rep, max_degree);
    let predicted = free_series(&p.source_degrees, max_degree);
    let mut per_degree = Vec::new();
    let mut notes = Vec::new();
    let mut all_lifted = Vec::new();
    for m in 0..=max_degree {
        let src = invariant_basis(&p.q.algebra, rep, m, None).basis;
        let lifted = l_space(&src, &p.q, side)?;
        let target = invariant_basis(&p.contracted, rep, m, None).basis;
        let mut ok = series[m as usize] == predicted[m as usize];
        ok &= lifted.len() == target.len();
        for f in &lifted {
            ok &= is_invariant(&p.contracted, f)?;
        }
        ok &= spans_within(&target, &lifted);
        if !ok {
            notes.push(format!("degree {m} mismatch"));
        }
        per_degree.push(ok);
        all_lifted.push(lifted);
    }
    let fam = l_generators(&all_lifted, &p.contracted, seed)?;
    let sources = l_family(&p.gens, &p.q, side, seed)?;
    if !sources.all_invariant() {
        notes.push("a gr part of a basic invariant is not invariant in the contraction".into());
    }
    if !p.routes_agree {
        notes.push("Takiff and contraction constructions disagree".into());
    }
    let pass = per_degree.iter().all(|&b| b)
        && p.routes_agree
        && fam.independent
        && fam.all_invariant()
        && sources.all_invariant()
        && fam.polys.len() == expected_krull;
    if fam.polys.len() != expected_krull {
        notes.push(format!(
            "family size {} differs from the Krull dimension {expected_krull}",
            fam.polys.len()
        ));
    }
    let mut generator_degrees: Vec<u32> = fam.polys.iter().map(|f| f.degree().unwrap_or(0)).collect();
    generator_degrees.sort_unstable();
    let report = TheoremReport {
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        series,
        predicted,
        per_degree,
        generator_degrees,
        family_size: fam.polys.len(),
        family_independent: fam.independent,
        family_invariant: fam.all_invariant(),
        expected_krull,
        routes_agree: p.routes_agree,
        notes,
        kostant: None,
        index: None,
    };
    Ok((report, fam))
}

fn g0_witness_gate(s: &Setup, witness: &Vector) -> Result<Option<TheoremReport>> {
    match check_nilpotent_witness(s, witness, 0)? {
        NRegular::Yes { .. } => Ok(None),
        NRegular::No { failures } => Ok(Some(TheoremReport::not_met(format!(
            "no regular nilpotent in g0: {}",
            failures.join("; ")
        )))),
    }
}

/// Adjoint invariants of `g<nk>_0` against the free algebra on the basic
/// degrees of `g` repeated `n` times.
pub fn verify_adjoint_theorem(s: &Setup, n: usize, max_degree: u32, g0_witness: &Vector, seed: u64) -> Result<TheoremReport> {
    if let Some(r) = g0_witness_gate(s, g0_witness)? {
        return Ok(r);
    }
    let p = copies_pipeline(s, n, Rep::Adjoint, max_degree, false)?;
    Ok(run_pipeline(&p, Rep::Adjoint, GrSide::Bottom, max_degree, n * s.rank, seed)?.0)
}

/// Same with source `n·g ∔ g_0` and the fixed-point quasi-grading.
pub fn verify_adjoint_theorem_plus(s: &Setup, n: usize, max_degree: u32, g0_witness: &Vector, seed: u64) -> Result<TheoremReport> {
    if let Some(r) = g0_witness_gate(s, g0_witness)? {
        return Ok(r);
    }
    let g0 = s.algebra().restrict_to(&s.grading.component_basis(0), Vec::new())?;
    let rk0 = index(&g0, DEFAULT_INDEX_TRIALS, seed, DEFAULT_COORD_BOUND).value;
    let p = copies_pipeline(s, n, Rep::Adjoint, max_degree, true)?;
    Ok(run_pipeline(&p, Rep::Adjoint, GrSide::Bottom, max_degree, n * s.rank + rk0, seed)?.0)
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityProfile {
    pub s_regular: SRegular,
    pub n_regular: NRegular,
    pub very_n_regular: VeryNReport,
}

pub fn regularity_profile(
    s: &Setup,
    s_witness: Option<&Vector>,
    n_witness: &Vector,
    trials: usize,
    seed: u64,
) -> Result<RegularityProfile> {
    let s_regular = check_s_regular(s, s_witness, trials, seed)?;
    let n_regular = check_n_regular(s, n_witness)?;
    let very_n_regular = check_very_n_sufficient(s, matches!(n_regular, NRegular::Yes { .. }), seed)?;
    Ok(RegularityProfile {
        s_regular,
        n_regular,
        very_n_regular,
    })
}

/// Whether every component of the nilpotent cone is known to meet `O^reg`:
/// certified, or supported by one verified witness per listed component.
pub fn very_n_supported(profile: &RegularityProfile, component_witnesses: &[NRegular]) -> VeryNVerdict {
    if profile.very_n_regular.verdict == VeryNVerdict::CertifiedViaSufficiency {
        return VeryNVerdict::CertifiedViaSufficiency;
    }
    if !component_witnesses.is_empty() && component_witnesses.iter().all(|w| matches!(w, NRegular::Yes { .. })) {
        return VeryNVerdict::WitnessOnly;
    }
    VeryNVerdict::NotCertified
}

/// Coadjoint invariants of `g<nk>_0`, the top-part family and the
/// free-generation criterion.
pub fn verify_coadjoint_theorem(s: &Setup, n: usize, max_degree: u32, profile: &RegularityProfile, very_n: VeryNVerdict, seed: u64) -> Result<TheoremReport> {
    if !matches!(profile.s_regular, SRegular::Yes { .. }) {
        return Ok(TheoremReport::not_met("S-regularity not certified".into()));
    }
    if very_n == VeryNVerdict::NotCertified {
        return Ok(TheoremReport::not_met("very N-regularity not supported".into()));
    }
    let p = copies_pipeline(s, n, Rep::Coadjoint, max_degree, false)?;
    let (mut r, fam) = run_pipeline(&p, Rep::Coadjoint, GrSide::Top, max_degree, n * s.rank, seed)?;
    let ir = index(&p.contracted, DEFAULT_INDEX_TRIALS, seed, DEFAULT_COORD_BOUND);
    if ir.value != n * s.rank {
        r.notes.push(format!("index {} differs from n·rk = {}", ir.value, n * s.rank));
        r.verdict = Verdict::Fail;
    }
    let kr = kostant_check(&p.contracted, &fam.polys, &ir)?;
    if kr.verdict != KostantVerdict::FreeGenerationCertified {
        r.notes.push(format!("free-generation criterion: {:?}", kr.verdict));
        r.verdict = Verdict::Fail;
    }
    r.index = Some(ir.value);
    r.kostant = Some(kr);
    Ok(r)
}

/// The four tower comparisons for `(theta, n)`.
pub fn tower_checks(s: &Setup, n: usize) -> Result<Vec<(String, bool)>> {
    let th = lift_for_copies(&s.theta, n)?;
    let k = th.order();
    let gr = eigenspace_grading(&th)?;
    Ok(vec![
        ("hat_fixed".into(), tower_vs_hat_fixed(&th, n * k)?.holds()?),
        ("cyclic_contraction".into(), tower_vs_cyclic_contraction(&gr)?.holds()?),
        ("copies_contraction".into(), tower_vs_copies_contraction(&th, n)?.holds()?),
        ("fixedpoint_contraction".into(), tower_vs_fixedpoint_contraction(&th, n)?.holds()?),
    ])
}

/// Order of the lifted automorphism and `hat_0` against the tower.
pub fn takiff_lift_check(s: &Setup, m: usize) -> Result<(usize, bool)> {
    let (_, hat) = lift_automorphism(&s.theta, m)?;
    Ok((hat.order(), tower_vs_hat_fixed(&s.theta, m)?.holds()?))
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub seed: u64,
    pub conductor: u32,
    pub algebra: AlgebraSpec,
    pub theta: ThetaSpec,
    pub n: usize,
    pub checks: Vec<CheckSpec>,
}

#[derive(Clone, Debug)]
pub struct CheckSpec {
    pub kind: String,
    pub params: Value,
    pub expect: Value,
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("scenario: missing {k:?}")));
        let checks = get("checks")?
            .as_array()
            .ok_or_else(|| Error::Parse("scenario: \"checks\" must be an array".into()))?
            .iter()
            .map(|c| {
                Ok(CheckSpec {
                    kind: c
                        .get("kind")
                        .and_then(Value::as_str)
                        .ok_or_else(|| Error::Parse("check: missing \"kind\"".into()))?
                        .to_string(),
                    params: c.get("params").cloned().unwrap_or_else(|| json!({})),
                    expect: c.get("expect").cloned().unwrap_or(Value::Null),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Scenario {
            name: get("name")?.as_str().unwrap_or_default().to_string(),
            seed: v.get("seed").and_then(Value::as_u64).unwrap_or(0),
            conductor: v.get("conductor").and_then(Value::as_u64).unwrap_or(1) as u32,
            algebra: AlgebraSpec::from_json(get("algebra")?)?,
            theta: ThetaSpec::from_json(get("theta")?)?,
            n: v.get("n").and_then(Value::as_u64).unwrap_or(1) as usize,
            checks,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub verdict: String,
    pub witnesses: Value,
    pub series: Option<Vec<usize>>,
    pub details: Value,
    pub expectation_met: bool,
    pub diff: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub seed: u64,
    pub algebra: String,
    pub theta: String,
    pub results: Vec<CheckResult>,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_EXPECTATION: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

fn param_u64(p: &Value, k: &str, default: u64) -> u64 {
    p.get(k).and_then(Value::as_u64).unwrap_or(default)
}

fn element_param(s: &Setup, p: &Value, k: &str) -> Result<Option<Vector>> {
    p.get(k).map(|v| parse_element(s.algebra(), v)).transpose()
}

fn required_element(s: &Setup, p: &Value, k: &str) -> Result<Vector> {
    element_param(s, p, k)?.ok_or_else(|| Error::Parse(format!("missing witness parameter {k:?}")))
}

/// `source`, `fixed`, `contraction`, `copies`, `tower` (nk levels) or `tower_plus`.
pub fn target_algebra(s: &Setup, n: usize, target: &str) -> Result<LieAlgebra> {
    let th = lift_for_copies(&s.theta, n)?;
    let k = th.order();
    match target {
        "source" => Ok(s.algebra().clone()),
        "fixed" | "g0" => s.algebra().restrict_to(&s.grading.component_basis(0), Vec::new()),
        "contraction" => contract(&QuasiGrading::from(&s.grading)),
        "copies" => crate::liealg::copies(s.algebra(), n),
        "tower" => Ok(crate::contract::fixed_tower(&th, n * k)?.1),
        "tower_plus" => Ok(crate::contract::fixed_tower(&th, n * k + 1)?.1),
        other => Err(Error::Parse(format!("unknown target {other:?}"))),
    }
}

struct Outcome {
    verdict: String,
    witnesses: Value,
    series: Option<Vec<usize>>,
    details: Value,
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

fn pass_fail(b: bool) -> String {
    if b { "pass" } else { "fail" }.to_string()
}

fn theorem_outcome(r: TheoremReport) -> Outcome {
    Outcome {
        verdict: to_json(&r.verdict).as_str().unwrap_or_default().to_string(),
        witnesses: Value::Null,
        series: Some(r.series.clone()),
        details: to_json(&r),
    }
}

fn run_check(s: &Setup, sc: &Scenario, c: &CheckSpec) -> Result<Outcome> {
    let p = &c.params;
    let seed = param_u64(p, "seed", sc.seed);
    let degree = param_u64(p, "degree", crate::invariants::DEFAULT_MAX_DEGREE as u64) as u32;
    let n = param_u64(p, "n", sc.n as u64) as usize;
    let out = match c.kind.as_str() {
        "validate" => {
            let g = s.algebra();
            let src = g.validate().passed;
            let con = contract(&QuasiGrading::from(&s.grading))?.validate().passed;
            Outcome {
                verdict: pass_fail(src && con),
                witnesses: Value::Null,
                series: None,
                details: json!({"dim": g.dim(), "source": src, "contraction": con}),
            }
        }
        "grading" => Outcome {
            verdict: pass_fail(s.grading.closure_defect().is_none()),
            witnesses: Value::Null,
            series: None,
            details: json!({"k": s.k(), "dims": s.grading.dims(), "conductor": s.algebra().conductor()}),
        },
        "s_regular" => {
            let w = element_param(s, p, "witness")?;
            let r = check_s_regular(s, w.as_ref(), param_u64(p, "trials", DEFAULT_S_TRIALS as u64) as usize, seed)?;
            let v = to_json(&r);
            Outcome {
                verdict: v["verdict"].as_str().unwrap_or_default().to_string(),
                witnesses: v.get("witness").cloned().map(|w| json!([w])).unwrap_or(Value::Null),
                series: None,
                details: v,
            }
        }
        "n_regular" => {
            let w = required_element(s, p, "witness")?;
            let v = to_json(&check_n_regular(s, &w)?);
            Outcome {
                verdict: v["verdict"].as_str().unwrap_or_default().to_string(),
                witnesses: v.get("witness").cloned().map(|w| json!([w])).unwrap_or(Value::Null),
                series: None,
                details: v,
            }
        }
        "very_n_regular" => {
            let w = required_element(s, p, "n_witness")?;
            let nreg = matches!(check_n_regular(s, &w)?, NRegular::Yes { .. });
            let r = check_very_n_sufficient(s, nreg, seed)?;
            let v = to_json(&r);
            Outcome {
                verdict: v["verdict"].as_str().unwrap_or_default().to_string(),
                witnesses: json!([w]),
                series: None,
                details: v,
            }
        }
        "takiff_lift" => {
            let m = param_u64(p, "m", 2) as usize;
            let (order, iso) = takiff_lift_check(s, m)?;
            Outcome {
                verdict: pass_fail(order == s.theta.order() && iso),
                witnesses: Value::Null,
                series: None,
                details: json!({"m": m, "order": order, "theta_order": s.theta.order(), "hat0_is_tower": iso}),
            }
        }
        "towers" => {
            let r = tower_checks(s, n)?;
            let all = r.iter().all(|x| x.1);
            let d: serde_json::Map<String, Value> = r.into_iter().map(|(k, b)| (k, Value::Bool(b))).collect();
            Outcome {
                verdict: pass_fail(all),
                witnesses: Value::Null,
                series: None,
                details: Value::Object(d),
            }
        }
        "index" => {
            let target = p.get("target").and_then(Value::as_str).unwrap_or("source");
            let g = target_algebra(s, n, target)?;
            let trials = param_u64(p, "trials", DEFAULT_INDEX_TRIALS as u64) as usize;
            let r = index(&g, trials, seed, DEFAULT_COORD_BOUND);
            Outcome {
                verdict: pass_fail(r.parity_ok),
                witnesses: json!([r.min_stabilizer_witness]),
                series: None,
                details: json!({"target": target, "dim": g.dim(), "value": r.value, "parity_ok": r.parity_ok,
                                "upper_bound_only": r.upper_bound_only}),
            }
        }
        "poincare" => {
            let target = p.get("target").and_then(Value::as_str).unwrap_or("source");
            let rep: Rep = p.get("rep").and_then(Value::as_str).unwrap_or("adjoint").parse()?;
            let g = target_algebra(s, n, target)?;
            crate::invariants::check_limits(&g, degree, DEFAULT_MAX_DIM, crate::invariants::DEFAULT_MAX_DEGREE)?;
            let series = poincare(&g, rep, degree);
            Outcome {
                verdict: "pass".into(),
                witnesses: Value::Null,
                series: Some(series),
                details: json!({"target": target, "dim": g.dim(), "rep": rep}),
            }
        }
        "adjoint_theorem" => {
            let w = required_element(s, p, "witness")?;
            theorem_outcome(verify_adjoint_theorem(s, n, degree, &w, seed)?)
        }
        "adjoint_theorem_plus" => {
            let w = required_element(s, p, "witness")?;
            theorem_outcome(verify_adjoint_theorem_plus(s, n, degree, &w, seed)?)
        }
        "coadjoint_theorem" => {
            let sw = element_param(s, p, "s_witness")?;
            let nw = required_element(s, p, "n_witness")?;
            let profile = regularity_profile(s, sw.as_ref(), &nw, DEFAULT_S_TRIALS, seed)?;
            let comps: Vec<NRegular> = match p.get("component_witnesses").and_then(Value::as_array) {
                Some(ws) => ws
                    .iter()
                    .map(|w| check_n_regular(s, &parse_element(s.algebra(), w)?))
                    .collect::<Result<_>>()?,
                None => Vec::new(),
            };
            let very = very_n_supported(&profile, &comps);
            let r = verify_coadjoint_theorem(s, n, degree, &profile, very.clone(), seed)?;
            let mut o = theorem_outcome(r);
            o.details["very_n_regular"] = to_json(&very);
            o.details["profile"] = to_json(&profile);
            o
        }
        other => return Err(Error::Parse(format!("unknown check kind {other:?}"))),
    };
    Ok(out)
}

/// Keys of `expect` compared with the verdict, series and details.
fn compare_expectation(expect: &Value, o: &Outcome) -> Vec<String> {
    let Some(map) = expect.as_object() else { return Vec::new() };
    let mut diff = Vec::new();
    for (k, want) in map {
        let got = match k.as_str() {
            "verdict" => Value::String(o.verdict.clone()),
            "series" => to_json(&o.series),
            _ => o.details.get(k).cloned().unwrap_or(Value::Null),
        };
        if &got != want {
            diff.push(format!("{k}: expected {want}, got {got}"));
        }
    }
    diff
}

pub fn run_scenario(sc: &Scenario) -> ScenarioReport {
    let mut report = ScenarioReport {
        scenario: sc.name.clone(),
        seed: sc.seed,
        algebra: sc.algebra.to_string(),
        theta: sc.theta.to_string(),
        results: Vec::new(),
        exit_code: EXIT_PASS,
        error: None,
    };
    let setup = match Setup::from_specs(&sc.algebra, &sc.theta, sc.conductor) {
        Ok(s) => s,
        Err(e) => {
            report.exit_code = EXIT_INPUT;
            report.error = Some(e.to_string());
            return report;
        }
    };
    for c in &sc.checks {
        let o = match run_check(&setup, sc, c) {
            Ok(o) => o,
            Err(e) => {
                report.exit_code = EXIT_INPUT;
                report.error = Some(format!("{}: {e}", c.kind));
                return report;
            }
        };
        let diff = compare_expectation(&c.expect, &o);
        let wanted_not_met = c.expect.get("verdict").and_then(Value::as_str) == Some("hypothesis-not-met");
        let hyp_fail = o.verdict == "hypothesis-not-met" && !wanted_not_met;
        report.results.push(CheckResult {
            check: c.kind.clone(),
            verdict: o.verdict,
            witnesses: o.witnesses,
            series: o.series,
            details: o.details,
            expectation_met: diff.is_empty(),
            diff: diff.clone(),
        });
        if hyp_fail {
            report.exit_code = EXIT_HYPOTHESIS;
            return report;
        }
        if !diff.is_empty() {
            report.exit_code = EXIT_EXPECTATION;
        }
    }
    report
}

pub fn run_scenario_file(path: &std::path::Path, seed: Option<u64>) -> ScenarioReport {
    let fail = |e: String| ScenarioReport {
        scenario: path.display().to_string(),
        seed: seed.unwrap_or(0),
        algebra: String::new(),
        theta: String::new(),
        results: Vec::new(),
        exit_code: EXIT_INPUT,
        error: Some(e),
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(e.to_string()),
    };
    match Scenario::parse(&text) {
        Ok(mut sc) => {
            if let Some(s) = seed {
                sc.seed = s;
            }
            run_scenario(&sc)
        }
        Err(e) => fail(e.to_string()),
    }
}

/// Bundled scenario directory of this crate.
pub fn scenario_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios")
}
