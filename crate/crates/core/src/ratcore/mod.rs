//! Exact arithmetic in `Z[q]` and its fraction field `Q(q)`.

mod gcd;
mod json;
mod qpoly;
mod ratfunc;

pub use gcd::{gcd_modular, gcd_subresultant, poly_gcd, poly_gcd_full};
pub use json::{deserialize, serialize};
pub use qpoly::QPoly;
pub use ratfunc::{eval_at, ratfunc_arith, ArithOp, RatFuncQ};

/// `(-1)^e` for a nonnegative integer exponent.
pub fn parity_sign(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}
