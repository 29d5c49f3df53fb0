//! Exact arithmetic in Q(q): every value is reduced to a unique canonical form,
//! so `==` is equality of rational functions.

use num_rational::BigRational;
use qhankel::ratcore::{deserialize, serialize};
use qhankel::{QPoly, RatFuncQ};

fn main() -> qhankel::Result<()> {
    let q = RatFuncQ::q();
    let one = RatFuncQ::one();

    // (1 - q^2) / (1 - q) collapses to 1 + q
    let f = RatFuncQ::new(QPoly::from_i64s(&[1, 0, -1]), QPoly::from_i64s(&[1, -1]))?;
    println!("(1-q^2)/(1-q) = {f}");
    assert_eq!(f, &one + &q);

    let g = &(&one / &(&one + &q)) - &(&one / &(&one - &q));
    println!("1/(1+q) - 1/(1-q) = {g}");

    let half = RatFuncQ::from_int(1).checked_div(&RatFuncQ::from_int(2))?;
    let h = &g * &half;
    println!("half of that = {h}");

    // evaluation is exact; poles are reported instead of producing garbage
    let at = BigRational::new(2.into(), 3.into());
    println!("at q = 2/3: {}", h.eval_at(&at)?);
    match h.eval_at(&BigRational::from_integer(1.into())) {
        Ok(v) => println!("at q = 1: {v}"),
        Err(e) => println!("at q = 1: {e}"),
    }

    let text = serialize(&h);
    println!("json: {text}");
    assert_eq!(deserialize(&text)?, h);
    Ok(())
}
