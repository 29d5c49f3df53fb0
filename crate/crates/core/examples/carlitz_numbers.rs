//! Carlitz q-Euler and q-Bernoulli numbers: explicit sums against recursions,
//! and the q -> 1 limit of the q-Euler numbers.

use qhankel::carlitz::{limit_q1, q_bernoulli_sequence, q_euler_explicit, q_euler_recursive, q_euler_sequence, SeqId};

fn main() -> qhankel::Result<()> {
    for (n, e) in q_euler_sequence(5).iter().enumerate() {
        println!("eps_{n} = {e}");
    }
    for (n, b) in q_bernoulli_sequence(4).iter().enumerate() {
        println!("beta_{n} = {b}");
    }
    for n in 0..=12 {
        assert_eq!(q_euler_explicit(n), q_euler_recursive(n));
    }
    println!("explicit sum = recursion for eps_0..eps_12");

    let limits: Vec<String> = (0..10).map(|n| limit_q1(SeqId::Qeuler, n).map(|v| v.to_string())).collect::<Result<_, _>>()?;
    println!("eps_n at q = 1: {}", limits.join(", "));
    Ok(())
}
