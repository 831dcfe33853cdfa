use liecontract::harness::{target_algebra, Setup};
use liecontract::invariants::{argument_shift, basic_invariants, gamma_split, poisson, Rep};

fn main() -> liecontract::Result<()> {
    let s = Setup::from_specs(&"sl2".parse()?, &"neg_transpose".parse()?, 1)?;
    let g = target_algebra(&s, 1, "source")?;
    let c = &basic_invariants(&g, Rep::Coadjoint, 2)?[0];
    println!("Casimir of sl2: {c}");
    println!("as JSON: {}", serde_json::to_string(c).unwrap_or_default());
    let split = gamma_split(&liecontract::invariants::to_adapted_basis(c, &(&s.grading).into())?, &(&s.grading).into())?;
    for (d, part) in &split {
        println!("  Gamma-degree {d}: {part}");
    }
    let x = liecontract::poly::Polynomial::var(g.dim(), 0, liecontract::poly::Space::Sym, g.conductor());
    println!("{{C, e0}} = {}", poisson(&g, c, &x)?);
    let xi: Vec<_> = (0..g.dim()).map(|i| liecontract::scalars::Cyclotomic::from_int(i as i64, g.conductor())).collect();
    for (j, f) in argument_shift(c, &xi)?.iter().enumerate() {
        println!("  shift term {j}: {f}");
    }
    Ok(())
}
