//! q-analogues: q-integers, q-factorials, Gaussian binomials, q-Pochhammer
//! symbols and terminating basic hypergeometric series, all exact in `Q(q)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ratcore::{parity_sign, QPoly, RatFuncQ};

/// `(base; q^step)_length`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochSpec {
    pub base: RatFuncQ,
    pub step: usize,
    pub length: usize,
}

impl PochSpec {
    pub fn new(base: RatFuncQ, step: usize, length: usize) -> Result<Self> {
        if step == 0 {
            return Err(Error::OutOfRange("Pochhammer step must be at least 1".into()));
        }
        Ok(PochSpec { base, step, length })
    }
}

/// `[m]_q = (1 - q^m) / (1 - q)`, for any integer `m`.
pub fn q_int(m: i64) -> RatFuncQ {
    if m >= 0 {
        RatFuncQ::from_poly(QPoly::new(vec![BigInt::from(1); m as usize]))
    } else {
        // [m]_q = -q^m [-m]_q
        let pos = q_int(-m);
        -(&RatFuncQ::q_pow(m) * &pos)
    }
}

/// `[M]_q! = [1]_q [2]_q ... [M]_q`.
pub fn q_factorial(m: i64) -> Result<RatFuncQ> {
    if m < 0 {
        return Err(Error::Negative {
            what: "q-factorial argument",
            value: m,
        });
    }
    Ok((1..=m).map(q_int).product())
}

/// Gaussian binomial `[M choose N]_q`; zero outside `0 <= N <= M`.
pub fn q_binom(m: i64, n: i64) -> RatFuncQ {
    if n < 0 || m < 0 || n > m {
        return RatFuncQ::zero();
    }
    let n = n.min(m - n);
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for i in 1..=n {
        num = &num * &QPoly::one_plus_signed_power(-1, (m - n + i) as usize);
        den = &den * &QPoly::one_plus_signed_power(-1, i as usize);
    }
    RatFuncQ::from_poly(num.div_exact(&den).expect("Gaussian binomials are polynomials"))
}

/// `prod_{k=0}^{N-1} (1 - A q^{s k})`.
pub fn q_pochhammer(spec: &PochSpec) -> RatFuncQ {
    let one = RatFuncQ::one();
    (0..spec.length)
        .map(|k| &one - &(&spec.base * &RatFuncQ::q_pow((spec.step * k) as i64)))
        .product()
}

/// `(A; q)_n`, the step-1 symbol.
pub fn poch(base: &RatFuncQ, n: usize) -> RatFuncQ {
    q_pochhammer(&PochSpec {
        base: base.clone(),
        step: 1,
        length: n,
    })
}

/// `(sign * q^a; q^step)_n` for a monomial base. Stays in `Z[q]` when
/// `a >= 0`, which is the common case.
pub fn poch_monomial(sign: i64, a: i64, step: usize, n: usize) -> RatFuncQ {
    if a >= 0 {
        let mut acc = QPoly::one();
        for k in 0..n {
            acc = &acc * &QPoly::one_plus_signed_power(-sign, a as usize + step * k);
        }
        return RatFuncQ::from_poly(acc);
    }
    q_pochhammer(&PochSpec {
        base: RatFuncQ::signed_q_pow(sign, a),
        step,
        length: n,
    })
}

/// Terminating `_{r+1}phi_r` summed for `k = 0..=terms`:
///
/// `sum_k (a_1,...,a_{r+1}; q)_k arg^k / (q, b_1, ..., b_r; q)_k`.
///
/// A zero denominator parameter contributes `(0; q)_k = 1`.
pub fn q_hyper_terminating(
    num_params: &[RatFuncQ],
    den_params: &[RatFuncQ],
    arg: &RatFuncQ,
    terms: usize,
) -> Result<RatFuncQ> {
    let one = RatFuncQ::one();
    let mut term = RatFuncQ::one();
    let mut sum = RatFuncQ::one();
    for k in 0..terms {
        let qk = RatFuncQ::q_pow(k as i64);
        let mut ratio_num = arg.clone();
        for a in num_params {
            ratio_num = &ratio_num * &(&one - &(a * &qk));
        }
        let mut ratio_den = &one - &RatFuncQ::q_pow(k as i64 + 1);
        for b in den_params {
            let f = &one - &(b * &qk);
            if f.is_zero() {
                return Err(Error::VanishingPochhammer { k: k + 1 });
            }
            ratio_den = &ratio_den * &f;
        }
        term = &term * &(&ratio_num / &ratio_den);
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Checks `2phi1(a, q^{-N}; c; q, q) = a^N (c/a; q)_N / (c; q)_N`.
///
/// `a = 0` selects the limiting right-hand side
/// `(-1)^N q^{N(N-1)/2} c^N / (c; q)_N`.
pub fn verify_q_chu_vandermonde(a: &RatFuncQ, c: &RatFuncQ, n: usize) -> Result<bool> {
    let lhs = q_hyper_terminating(
        &[a.clone(), RatFuncQ::q_pow(-(n as i64))],
        std::slice::from_ref(c),
        &RatFuncQ::q(),
        n,
    )?;
    let c_poch = poch(c, n);
    if c_poch.is_zero() {
        return Err(Error::VanishingPochhammer { k: n });
    }
    let top = if a.is_zero() {
        let e = (n * n.saturating_sub(1) / 2) as i64;
        &RatFuncQ::signed_q_pow(parity_sign(n as u64), e) * &c.pow(n as i64)?
    } else {
        &a.pow(n as i64)? * &poch(&(c / a), n)
    };
    Ok(lhs == &top / &c_poch)
}

/// Checks the reversed form
/// `2phi1(q^{-N}, b; c; q, c q^N / b) = (c/b; q)_N / (c; q)_N`.
pub fn verify_reverse_q_chu_vandermonde(b: &RatFuncQ, c: &RatFuncQ, n: usize) -> Result<bool> {
    let arg = &(c * &RatFuncQ::q_pow(n as i64)) / b;
    let lhs = q_hyper_terminating(
        &[RatFuncQ::q_pow(-(n as i64)), b.clone()],
        std::slice::from_ref(c),
        &arg,
        n,
    )?;
    let c_poch = poch(c, n);
    if c_poch.is_zero() {
        return Err(Error::VanishingPochhammer { k: n });
    }
    Ok(lhs == &poch(&(c / b), n) / &c_poch)
}
