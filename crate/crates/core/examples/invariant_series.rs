use liecontract::harness::{free_series, target_algebra, Setup};
use liecontract::invariants::{basic_invariants, poincare, Rep};

fn main() -> liecontract::Result<()> {
    let s = Setup::from_specs(&"sl3".parse()?, &"neg_transpose".parse()?, 1)?;
    let c = target_algebra(&s, 1, "contraction")?;
    for rep in [Rep::Adjoint, Rep::Coadjoint] {
        println!("{rep:?} invariants of so3 x| g1: {:?}", poincare(&c, rep, 6));
    }
    println!("free algebra on degrees 2, 3:     {:?}", free_series(&[2, 3], 6));
    for f in basic_invariants(&c, Rep::Adjoint, 3)? {
        println!("  degree {:?}: {f}", f.degree());
    }

    let sl2 = "sl2<2>".parse::<liecontract::corpus::AlgebraSpec>()?.build()?;
    println!("takiff(sl2, 2): {:?}", poincare(&sl2, Rep::Adjoint, 4));
    Ok(())
}
