//! Big q-Jacobi specializations built three ways: from the three-term
//! recurrence, from the terminating 3phi2 and by an affine change of variable.

use qhankel::orthopoly::{build_p_via_phi2, coeffs_p, family_polys, p_from_jtilde, FamilyId, FamilyKind};

fn main() -> qhankel::Result<()> {
    let ell = 1;
    let p = family_polys(FamilyId::new(FamilyKind::PFamily, ell), 3)?;
    for (n, poly) in p.iter().enumerate() {
        println!("P_{n}(z) = {poly}");
    }
    for n in 0..3 {
        let (a, b) = coeffs_p(ell as usize, n);
        println!("a_{n} = {a}");
        if n > 0 {
            println!("b_{n} = {b}");
        }
    }

    let jt = family_polys(FamilyId::new(FamilyKind::MonicJtilde, ell), 3)?;
    let mapped = p_from_jtilde(&jt)?;
    for n in 0..=3 {
        assert_eq!(mapped[n], p[n]);
        assert_eq!(build_p_via_phi2(ell as usize, n), p[n]);
    }
    println!("recurrence, 3phi2 and affine routes agree for n <= 3");
    Ok(())
}
