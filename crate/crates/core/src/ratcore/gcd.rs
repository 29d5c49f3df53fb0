//! Polynomial gcd over `Z[q]`.
//!
//! Two independent algorithms live here: a subresultant remainder sequence
//! (exact integer arithmetic throughout) and a dense modular algorithm that
//! computes images modulo word-sized primes and lifts them with the Chinese
//! remainder theorem. [`poly_gcd`] picks between them by degree; the tests
//! check that both agree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::qpoly::QPoly;

/// Inputs whose larger degree is at most this go through the subresultant
/// sequence; larger ones go through the modular algorithm.
const SUBRESULTANT_MAX_DEGREE: usize = 24;

/// Greatest common divisor over `Q[q]`, returned as a primitive integer
/// polynomial with positive leading coefficient. `gcd(0, 0) = 0`.
///
/// Integer content is not part of the result; see [`poly_gcd_full`] for the
/// gcd in `Z[q]`.
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return QPoly::zero(),
        (true, false) => return b.primitive_part(),
        (false, true) => return a.primitive_part(),
        _ => {}
    }
    if a.is_constant() || b.is_constant() {
        return QPoly::one();
    }
    let (a, b) = (a.primitive_part(), b.primitive_part());
    if a == b {
        return a;
    }
    let deg = a.degree().unwrap().max(b.degree().unwrap());
    if deg <= SUBRESULTANT_MAX_DEGREE {
        gcd_primitive_subresultant(a, b)
    } else {
        gcd_primitive_modular(&a, &b)
    }
}

/// Gcd in `Z[q]`: the [`poly_gcd`] times the gcd of the integer contents.
pub fn poly_gcd_full(a: &QPoly, b: &QPoly) -> QPoly {
    let c = a.content().gcd(&b.content());
    let g = poly_gcd(a, b);
    if c.is_zero() {
        return g;
    }
    g.scale(&c)
}

/// Subresultant route, usable at any degree.
pub fn gcd_subresultant(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() {
        return poly_gcd(a, b);
    }
    gcd_primitive_subresultant(a.primitive_part(), b.primitive_part())
}

/// Modular route, usable at any degree.
pub fn gcd_modular(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() {
        return poly_gcd(a, b);
    }
    gcd_primitive_modular(&a.primitive_part(), &b.primitive_part())
}

fn gcd_primitive_subresultant(mut a: QPoly, mut b: QPoly) -> QPoly {
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive_part();
        }
        if r.is_constant() {
            return QPoly::one();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.div_scalar_exact(&divisor);
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h.clone(), delta - 1);
            num / den
        };
    }
}

fn gcd_primitive_modular(a: &QPoly, b: &QPoly) -> QPoly {
    let lc_gcd = a.lc().gcd(&b.lc());
    let lc_prod = a.lc() * b.lc();
    let mut best_deg = a.degree().unwrap().min(b.degree().unwrap()) + 1;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::zero();
    for p in LargePrimes::new() {
        let pb = BigInt::from(p);
        if (&lc_prod % &pb).is_zero() {
            continue;
        }
        let ap = reduce_mod(a, p);
        let bp = reduce_mod(b, p);
        let mut gp = gcd_mod_p(ap, bp, p);
        let d = gp.len() - 1;
        if d == 0 {
            return QPoly::one();
        }
        if d > best_deg {
            continue;
        }
        let scale = lc_gcd.mod_floor(&pb).to_u64().unwrap();
        for c in gp.iter_mut() {
            *c = mul_mod(*c, scale, p);
        }
        if d < best_deg {
            best_deg = d;
            acc = gp.iter().map(|&c| symmetric(BigInt::from(c), &pb)).collect();
            modulus = pb;
        } else {
            let prev = acc.clone();
            let m_inv = mod_inverse(modulus.mod_floor(&pb).to_u64().unwrap(), p);
            let new_modulus = &modulus * &pb;
            for (h, &c) in acc.iter_mut().zip(&gp) {
                let h_mod = h.mod_floor(&pb).to_u64().unwrap();
                let diff = (c + p - h_mod) % p;
                let t = mul_mod(diff, m_inv, p);
                let combined = &*h + &modulus * BigInt::from(t);
                *h = symmetric(combined, &new_modulus);
            }
            modulus = new_modulus;
            if prev == acc {
                let candidate = QPoly::new(acc.clone()).primitive_part();
                if a.div_exact(&candidate).is_some() && b.div_exact(&candidate).is_some() {
                    return candidate;
                }
            }
        }
    }
    unreachable!("prime iterator is unbounded")
}

fn symmetric(x: BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_mod(a: &QPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = a
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    trim(&mut v);
    v
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Monic gcd over `F_p`; inputs have nonzero leading coefficients mod p.
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = mod_inverse(*b.last().unwrap(), p);
        let db = b.len() - 1;
        while a.len() > db {
            let top = a.len() - 1;
            let t = mul_mod(a[top], inv, p);
            if t != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    let idx = top - db + j;
                    a[idx] = (a[idx] + p - mul_mod(t, bj, p)) % p;
                }
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = mod_inverse(*a.last().unwrap(), p);
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below 2^62.
struct LargePrimes {
    next: u64,
}

impl LargePrimes {
    fn new() -> Self {
        LargePrimes { next: (1u64 << 62) - 1 }
    }
}

impl Iterator for LargePrimes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while !is_prime_u64(self.next) {
            self.next -= 2;
        }
        let p = self.next;
        self.next -= 2;
        Some(p)
    }
}
