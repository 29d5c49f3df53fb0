//! q-integers, q-binomials, Pochhammer symbols and terminating basic
//! hypergeometric sums, checked against the q-Chu-Vandermonde summation.

use qhankel::qkit::{poch, q_binom, q_factorial, q_hyper_terminating, q_int, verify_q_chu_vandermonde};
use qhankel::RatFuncQ;

fn main() -> qhankel::Result<()> {
    for m in [-2, 0, 3, 5] {
        println!("[{m}]_q = {}", q_int(m));
    }
    println!("[4]_q! = {}", q_factorial(4)?);
    for k in 0..=4 {
        println!("[4 choose {k}]_q = {}", q_binom(4, k));
    }
    println!("(-q; q)_3 = {}", poch(&RatFuncQ::signed_q_pow(-1, 1), 3));

    // 2phi1(q^-1, 0; -q^2; q, q), a sum that stops after one term
    let s = q_hyper_terminating(&[RatFuncQ::q_pow(-1), RatFuncQ::zero()], &[RatFuncQ::signed_q_pow(-1, 2)], &RatFuncQ::q(), 1)?;
    println!("2phi1(q^-1, 0; -q^2; q, q) = {s}");

    let a = RatFuncQ::q_pow(3);
    let c = RatFuncQ::signed_q_pow(-1, 1);
    for n in 0..=5 {
        assert!(verify_q_chu_vandermonde(&a, &c, n)?);
    }
    println!("q-Chu-Vandermonde holds for a = q^3, c = -q, N <= 5");
    Ok(())
}
