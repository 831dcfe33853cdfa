use liecontract::liealg::{copies, construct_classical, coxeter_number, ClassicalKind};

fn main() -> liecontract::Result<()> {
    for (kind, n) in [
        (ClassicalKind::Sl, 2),
        (ClassicalKind::Sl, 3),
        (ClassicalKind::Gl, 3),
        (ClassicalKind::So, 5),
        (ClassicalKind::Sp, 4),
    ] {
        let g = construct_classical(kind, n)?;
        let v = g.validate();
        let h = coxeter_number(kind, n).map(|c| c.to_string()).unwrap_or("-".into());
        println!("{kind:?}{n}: dim {:>2}, rank {:?}, coxeter {h}, jacobi {}", g.dim(), g.rank(), v.passed);
    }
    let two = copies(&construct_classical(ClassicalKind::Sl, 2)?, 2)?;
    println!("2*sl2: dim {}, rank {:?}", two.dim(), two.rank());
    Ok(())
}
