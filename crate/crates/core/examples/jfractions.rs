//! Jacobi continued fractions: expand the q-Euler J-fraction back into its
//! moments and recover the coefficients from the moments alone.

use qhankel::carlitz::q_euler_sequence;
use qhankel::hankel::{jfraction_expand, jfraction_for_eps, jfraction_from_moments};

fn main() -> qhankel::Result<()> {
    let jf = jfraction_for_eps(0)?;
    for n in 0..3 {
        println!("a_{n} = {}", jf.a(n)?);
        println!("b_{} = {}", n + 1, jf.b(n + 1)?);
    }

    let eps = q_euler_sequence(8);
    assert_eq!(jfraction_expand(&jf, 8)?, eps);
    println!("expansion reproduces eps_0..eps_8");

    let recovered = jfraction_from_moments(&eps)?;
    for n in 0..=3 {
        assert_eq!(recovered.a(n)?, jf.a(n)?);
    }
    for n in 1..=4 {
        assert_eq!(recovered.b(n)?, jf.b(n)?);
    }
    println!("coefficients recovered from the moments");
    Ok(())
}
