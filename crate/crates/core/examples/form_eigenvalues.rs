use liecontract::harness::Setup;
use liecontract::liealg::{invariant_form, FormSource};
use liecontract::takiff::form_eigen_report;

fn main() -> liecontract::Result<()> {
    for alg in ["sl2", "sl3"] {
        let s = Setup::from_specs(&alg.parse()?, &"neg_transpose".parse()?, 1)?;
        let b = invariant_form(s.algebra(), FormSource::TraceDefining)?;
        for m in 2..=4 {
            let r = form_eigen_report(&s.theta, &b, m)?;
            println!(
                "{alg}<{m}>: c = {}, eigenvalue z^{} = {}, identity {}, dual {:?}, pairing {}",
                r.c, r.hat_exponent, r.hat_eigenvalue, r.eigen_identity, r.dual, r.pairing_matches
            );
        }
    }
    Ok(())
}
