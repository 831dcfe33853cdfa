use liecontract::corpus::parse_element;
use liecontract::harness::{check_n_regular, check_s_regular, check_very_n_sufficient, NRegular, Setup};
use serde_json::json;

fn main() -> liecontract::Result<()> {
    let s = Setup::from_specs(&"sp4".parse()?, &"torus:1,0,2,3/4".parse()?, 4)?;
    println!("sp4 order-4 grading dims {:?}", s.grading.dims());

    let sr = check_s_regular(&s, None, 20, 1)?;
    println!("S-regular: {}", serde_json::to_string(&sr).unwrap_or_default());

    let e = parse_element(s.algebra(), &json!({"matrix": [[0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, -1, 0]]}))?;
    let nr = check_n_regular(&s, &e)?;
    println!("N-regular: {}", matches!(nr, NRegular::Yes { .. }));

    let v = check_very_n_sufficient(&s, matches!(nr, NRegular::Yes { .. }), 1)?;
    println!("very N-regular: {:?}", v.verdict);
    for note in &v.notes {
        println!("  {note}");
    }
    Ok(())
}
