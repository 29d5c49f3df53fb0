//! Hankel determinants of the q-Euler numbers computed by fraction-free
//! elimination, by the Heilermann product and by the closed form.

use qhankel::carlitz::SeqId;
use qhankel::hankel::{hankel_det, Method};

fn main() -> qhankel::Result<()> {
    for shift in 0..=2 {
        for n in 0..=3 {
            let values: Vec<_> = Method::ALL.iter().map(|&m| hankel_det(SeqId::Qeuler, shift, n, m)).collect::<Result<_, _>>()?;
            assert!(values.windows(2).all(|w| w[0].value == w[1].value));
            println!("H_{n}^({shift}) = {}", values[0].value);
        }
    }
    let beta = hankel_det(SeqId::Qbernoulli, 0, 3, Method::Closedform)?;
    println!("q-Bernoulli H_3 = {}", beta.value);
    println!("{}", serde_json::to_string(&beta).unwrap());
    Ok(())
}
