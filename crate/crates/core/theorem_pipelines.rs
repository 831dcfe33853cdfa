use liecontract::corpus::parse_element;
use liecontract::harness::{regularity_profile, verify_adjoint_theorem, verify_coadjoint_theorem, very_n_supported, Setup};
use serde_json::json;

fn main() -> liecontract::Result<()> {
    let sl3 = Setup::from_specs(&"sl3".parse()?, &"neg_transpose".parse()?, 4)?;
    let e0 = parse_element(sl3.algebra(), &json!({"matrix": [[0, 1, 0], [-1, 0, "i"], [0, "-i", 0]]}))?;
    let r = verify_adjoint_theorem(&sl3, 1, 6, &e0, 3)?;
    println!("adjoint, so3 x| g1: {:?}, series {:?}, generators {:?}", r.verdict, r.series, r.generator_degrees);

    let sl2 = Setup::from_specs(&"sl2".parse()?, &"neg_transpose".parse()?, 4)?;
    let s = parse_element(sl2.algebra(), &json!({"matrix": [[1, 0], [0, -1]]}))?;
    let e = parse_element(sl2.algebra(), &json!({"matrix": [[1, "i"], ["i", -1]]}))?;
    let profile = regularity_profile(&sl2, Some(&s), &e, 20, 3)?;
    let very_n = very_n_supported(&profile, &[]);
    let r = verify_coadjoint_theorem(&sl2, 1, 4, &profile, very_n, 3)?;
    println!(
        "coadjoint, so2 x| g1: {:?}, series {:?}, generators {:?}, index {:?}",
        r.verdict, r.series, r.generator_degrees, r.index
    );
    if let Some(k) = &r.kostant {
        println!("  degree sum {} against b = {}: {:?}", k.degree_sum, k.b, k.verdict);
    }
    Ok(())
}
