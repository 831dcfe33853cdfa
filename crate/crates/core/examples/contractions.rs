use liecontract::contract::{
    contract, isotropy_contraction, scaled_limit, tower_vs_copies_contraction, tower_vs_cyclic_contraction,
    tower_vs_fixedpoint_contraction, QuasiGrading,
};
use liecontract::harness::Setup;

fn main() -> liecontract::Result<()> {
    let s = Setup::from_specs(&"sl3".parse()?, &"neg_transpose".parse()?, 1)?;
    let q = QuasiGrading::from(&s.grading);
    let c = contract(&q)?;
    let lim = scaled_limit(&q)?;
    println!("so3 x| g1: dim {}, jacobi {}, equals the t -> 0 limit: {}", c.dim(), c.validate().passed, c == lim);

    println!("cyclic contraction = tower: {}", tower_vs_cyclic_contraction(&s.grading)?.holds()?);
    for n in 1..=2 {
        let a = tower_vs_copies_contraction(&s.theta, n)?;
        let b = tower_vs_fixedpoint_contraction(&s.theta, n)?;
        println!(
            "n = {n}: contraction of {n}*sl3 (dim {}) = tower: {}; of g0 + {n}*sl3 (dim {}) = tower: {}",
            a.target.dim(),
            a.holds()?,
            b.target.dim(),
            b.holds()?
        );
    }

    let iso = isotropy_contraction(&q.algebra, &s.grading.blocks[0])?;
    println!("isotropy contraction: dim {}, jacobi {}", iso.dim(), iso.validate().passed);
    Ok(())
}
