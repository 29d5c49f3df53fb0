//! Linear functionals on Q(q)[z] given by their moments, and the
//! orthogonality they induce on the polynomial families.

use qhankel::functionals::{phi, phi_via_moments, qbinom_basis, verify_orthogonality, verify_phi_relation, FunctionalId};
use qhankel::orthopoly::ZPoly;
use qhankel::RatFuncQ;

fn main() -> qhankel::Result<()> {
    // Phi(z^n) is eps_n
    for n in 0..=3 {
        let zn = ZPoly::monomial(RatFuncQ::one(), n);
        println!("Phi(z^{n}) = {}", phi(&zn));
    }
    let b = qbinom_basis(3, 2);
    println!("[3, z choose 2]_q = {b}");
    assert_eq!(phi(&b), phi_via_moments(&b));
    println!("Phi of it = {}", phi(&b));

    let p = ZPoly::new((0..5).map(|k| RatFuncQ::from_int(3 - 2 * k)).collect());
    assert!(verify_phi_relation(&p));
    println!("q Phi(P(1+qz)) + Phi(P) = (1+q) P(0) for P = {p}");

    for f in [FunctionalId::Phi, FunctionalId::PhiEll(1), FunctionalId::ThetaEll(2), FunctionalId::XiEll(1)] {
        let fam = f.partner()?;
        let r = verify_orthogonality(f, fam, 5)?;
        println!("{f} on {fam}: {}", if r.passed() { "orthogonal up to degree 5" } else { "FAILED" });
    }
    Ok(())
}
