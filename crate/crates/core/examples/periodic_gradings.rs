use liecontract::corpus::{AlgebraSpec, ThetaSpec};
use liecontract::harness::Setup;

fn main() -> liecontract::Result<()> {
    for (alg, theta) in [
        ("sl3", "neg_transpose"),
        ("sl4", "neg_sympl_transpose"),
        ("gl3", "torus:0,1,2/3"),
        ("sp4", "torus:1,0,2,3/4"),
        ("3*sl2", "shift"),
    ] {
        let spec: AlgebraSpec = alg.parse()?;
        let th: ThetaSpec = theta.parse()?;
        let s = Setup::from_specs(&spec, &th, 1)?;
        println!(
            "{alg:>6} {theta:<20} order {} over Q(z_{}) dims {:?} closed {}",
            s.k(),
            s.algebra().conductor(),
            s.grading.dims(),
            s.grading.closure_defect().is_none()
        );
    }
    Ok(())
}
