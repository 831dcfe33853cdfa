use liecontract::harness::{target_algebra, Setup};
use liecontract::invariants::{b_of, index, kirillov_matrix, DEFAULT_COORD_BOUND};

fn main() -> liecontract::Result<()> {
    let sl2 = Setup::from_specs(&"sl2".parse()?, &"neg_transpose".parse()?, 1)?;
    let sl3 = Setup::from_specs(&"sl3".parse()?, &"neg_transpose".parse()?, 1)?;
    let cases = [
        ("sl2<2>", "sl2<2>".parse::<liecontract::corpus::AlgebraSpec>()?.build()?),
        ("2*sl2", "2*sl2".parse::<liecontract::corpus::AlgebraSpec>()?.build()?),
        ("so2 x| g1", target_algebra(&sl2, 1, "contraction")?),
        ("so3 x| g1", target_algebra(&sl3, 1, "contraction")?),
        ("sl3<2> fixed points", target_algebra(&sl3, 1, "tower_plus")?),
    ];
    for (name, g) in cases {
        let r = index(&g, 5, 42, DEFAULT_COORD_BOUND);
        let b = b_of(&g, r.value);
        println!(
            "{name:<20} dim {:>2}  index {} (upper bound from {} samples, parity {})  b = {}",
            g.dim(),
            r.value,
            r.trials,
            r.parity_ok,
            b.value
        );
    }
    let g = target_algebra(&sl2, 1, "contraction")?;
    let xi: Vec<_> = (0..g.dim()).map(|i| liecontract::scalars::Cyclotomic::from_int(i as i64 + 1, g.conductor())).collect();
    println!("Kirillov matrix of so2 x| g1 at (1,2,3) has rank {}", kirillov_matrix(&g, &xi).rank());
    Ok(())
}
