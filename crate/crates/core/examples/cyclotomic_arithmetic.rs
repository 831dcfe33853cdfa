use liecontract::scalars::{cyclotomic_polynomial, parse_cyclotomic, root_of_unity, Cyclotomic};

fn main() -> liecontract::Result<()> {
    let n = 12;
    let z = root_of_unity(12, n)?;
    println!("Phi_12 coefficients: {:?}", cyclotomic_polynomial(n));
    println!("z = {z}, z^12 = {}", z.pow(12)?);

    let i = root_of_unity(4, n)?;
    let w = root_of_unity(3, n)?;
    let s = i.try_add(&w)?;
    println!("i + w = {s}, inverse = {}", s.inv()?);
    assert!(s.try_mul(&s.inv()?)?.is_one());

    let x = parse_cyclotomic("1/2 - 3*i + z^5", n)?;
    println!("parsed: {x}");
    let sum: Cyclotomic = (0..12).try_fold(Cyclotomic::zero(n), |acc, j| acc.try_add(&z.pow(j)?))?;
    println!("sum of all 12th roots = {sum}");
    Ok(())
}
