mod common;

use common::*;
use liecontract::harness::{run_scenario_file, scenario_dir, EXIT_EXPECTATION};
use liecontract::invariants::Rep;
use liecontract::poly::{Polynomial, Space};
use proptest::prelude::*;

fn sym_triple() -> impl Strategy<Value = (usize, (Polynomial, Polynomial, Polynomial))> {
    algebra_index().prop_flat_map(|i| {
        let g = &small_algebras()[i];
        let (d, n) = (g.dim(), g.conductor());
        (
            Just(i),
            (
                polynomial(d, n, Space::Sym, 2, 4),
                polynomial(d, n, Space::Sym, 2, 4),
                polynomial(d, n, Space::Sym, 2, 4),
            ),
        )
    })
}

fn derivation_inputs() -> impl Strategy<Value = (usize, bool, usize, Polynomial, Polynomial)> {
    (algebra_index(), any::<bool>()).prop_flat_map(|(i, adjoint)| {
        let g = &small_algebras()[i];
        let space = if adjoint { Space::Fun } else { Space::Sym };
        let p = || polynomial(g.dim(), g.conductor(), space, 3, 5);
        (Just(i), Just(adjoint), 0..g.dim(), p(), p())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in field_triple()) {
        prop_assert_eq!(field_axioms(&a, &b, &c), Ok(()));
    }

    #[test]
    fn poisson_bracket_is_a_lie_bracket((i, (f, h, k)) in sym_triple()) {
        let g = &small_algebras()[i];
        prop_assert_eq!(poisson_jacobi(g, &f, &h, &k), Ok(()));
        prop_assert_eq!(poisson_leibniz(g, &f, &h, &k), Ok(()));
    }

    #[test]
    fn derivations_satisfy_the_product_rule((i, adjoint, x, f, h) in derivation_inputs()) {
        let g = &small_algebras()[i];
        let rep = if adjoint { Rep::Adjoint } else { Rep::Coadjoint };
        prop_assert_eq!(derivation_product_rule(g, rep, x, &f, &h), Ok(()));
    }
}

#[test]
fn leading_parts_preserve_slice_dimensions() {
    for (name, q) in corpus_quasi_gradings() {
        let cap = if q.algebra.dim() <= 6 { 4 } else { 3 };
        assert_eq!(poincare_equality(&name, &q, cap), Ok(()));
    }
}

#[test]
fn perturbed_expectation_exits_with_a_diff() {
    let text = std::fs::read_to_string(scenario_dir().join("sl2_involution.json")).unwrap();
    let perturbed = text.replace("\"series\": [1, 0, 1, 0, 1]", "\"series\": [1, 0, 1, 0, 2]");
    assert_ne!(text, perturbed);
    let path = std::env::temp_dir().join(format!("perturbed_{}.json", std::process::id()));
    std::fs::write(&path, perturbed).unwrap();
    let r = run_scenario_file(&path, None);
    std::fs::remove_file(&path).ok();
    assert_eq!(r.exit_code, EXIT_EXPECTATION);
    let diffs: Vec<_> = r.results.iter().flat_map(|c| c.diff.iter()).collect();
    assert_eq!(diffs.len(), 1);
    assert!(diffs[0].contains("series"));
}

#[test]
fn reports_are_deterministic() {
    let p = scenario_dir().join("sl3_involution.json");
    let a = serde_json::to_string(&run_scenario_file(&p, None)).unwrap();
    let b = serde_json::to_string(&run_scenario_file(&p, None)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn malformed_scenarios_report_the_line() {
    let path = std::env::temp_dir().join(format!("broken_{}.json", std::process::id()));
    std::fs::write(&path, "{\n  \"name\": \"x\",\n  \"algebra\": \"sl2\"\n  \"theta\": \"id\"\n}\n").unwrap();
    let r = run_scenario_file(&path, None);
    std::fs::remove_file(&path).ok();
    assert_eq!(r.exit_code, liecontract::harness::EXIT_INPUT);
    assert!(r.error.unwrap_or_default().contains("line 4"));
}
