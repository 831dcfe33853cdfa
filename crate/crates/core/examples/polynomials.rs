use liecontract::contract::QuasiGrading;
use liecontract::harness::Setup;
use liecontract::invariants::{argument_shift, basic_invariants, gamma_split, poisson, to_adapted_basis, Rep};
use liecontract::poly::{Polynomial, Space};
use liecontract::scalars::Cyclotomic;

fn main() -> liecontract::Result<()> {
    let s = Setup::from_specs(&"sl2".parse()?, &"neg_transpose".parse()?, 1)?;
    let g = s.algebra();
    let c = &basic_invariants(g, Rep::Coadjoint, 2)?[0];
    println!("Casimir of sl2: {c}");
    println!("as JSON: {}", serde_json::to_string(c).unwrap_or_default());

    let q = QuasiGrading::from(&s.grading);
    for (d, part) in gamma_split(&q, &to_adapted_basis(c, &q)?)? {
        println!("  Gamma-degree {d}: {part}");
    }

    let x = Polynomial::var(0, g.dim(), Space::Sym, g.conductor());
    println!("{{C, e0}} = {}", poisson(g, c, &x)?);
    let xi: Vec<_> = (0..g.dim()).map(|i| Cyclotomic::from_int(i as i64, g.conductor())).collect();
    for (j, f) in argument_shift(c, &xi)?.iter().enumerate() {
        println!("  shift term {j}: {f}");
    }
    Ok(())
}
