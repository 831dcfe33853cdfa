use liecontract::contract::tower_vs_hat_fixed;
use liecontract::harness::Setup;
use liecontract::takiff::{hat_eigenspaces, lift_automorphism, predicted_hat_dims, takiff};

fn main() -> liecontract::Result<()> {
    let s = Setup::from_specs(&"sl3".parse()?, &"neg_transpose".parse()?, 1)?;
    for m in 1..=4 {
        let t = takiff(s.algebra(), m)?;
        let (_, hat) = lift_automorphism(&s.theta, m)?;
        let gr = hat_eigenspaces(&hat)?;
        let cmp = tower_vs_hat_fixed(&s.theta, m)?;
        println!(
            "sl3<{m}>: dim {:>2}, hat order {}, dims {:?} (predicted {:?}), fixed points = tower: {}",
            t.algebra.dim(),
            hat.order(),
            gr.dims(),
            predicted_hat_dims(&s.grading.dims(), m),
            cmp.holds()?
        );
    }
    Ok(())
}
