//! Carlitz q-Euler numbers `eps_n` and q-Bernoulli numbers `beta_n`.
//!
//! Each sequence has an explicit alternating-sum definition and a recursive
//! one. The two are coded separately (different binomial routines, no shared
//! helpers beyond field arithmetic) so that their agreement is a real check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratcore::{QPoly, RatFuncQ};

/// Which moment sequence a [`MomentSeq`] holds.
///
/// Serialized as its short name: `qeuler`, `qbernoulli`, `theta2`, `xi0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum SeqId {
    /// Carlitz q-Euler numbers.
    Qeuler,
    /// Carlitz q-Bernoulli numbers.
    Qbernoulli,
    /// Monomial moments of the functional `Theta_ell`.
    ThetaEll(u32),
    /// The sequence `xi_{ell,n}`.
    XiEll(u32),
}

impl fmt::Display for SeqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqId::Qeuler => f.write_str("qeuler"),
            SeqId::Qbernoulli => f.write_str("qbernoulli"),
            SeqId::ThetaEll(l) => write!(f, "theta{l}"),
            SeqId::XiEll(l) => write!(f, "xi{l}"),
        }
    }
}

impl From<SeqId> for String {
    fn from(id: SeqId) -> String {
        id.to_string()
    }
}

impl TryFrom<String> for SeqId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for SeqId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::OutOfRange(format!("unknown sequence id {s:?}"));
        match s {
            "qeuler" => Ok(SeqId::Qeuler),
            "qbernoulli" => Ok(SeqId::Qbernoulli),
            _ => {
                if let Some(rest) = s.strip_prefix("theta") {
                    rest.parse().map(SeqId::ThetaEll).map_err(|_| bad())
                } else if let Some(rest) = s.strip_prefix("xi") {
                    rest.parse().map(SeqId::XiEll).map_err(|_| bad())
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// A prefix `values[0..=N]` of a named sequence. Values are appended in
/// index order and never change once computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSeq {
    id: SeqId,
    values: Vec<RatFuncQ>,
}

impl MomentSeq {
    /// The first `upto + 1` terms of `id`.
    pub fn new(id: SeqId, upto: usize) -> Self {
        let mut s = MomentSeq {
            id,
            values: Vec::new(),
        };
        s.extend_to(upto);
        s
    }

    /// Wraps an externally supplied prefix.
    pub fn from_values(id: SeqId, values: Vec<RatFuncQ>) -> Self {
        MomentSeq { id, values }
    }

    pub fn id(&self) -> SeqId {
        self.id
    }

    pub fn values(&self) -> &[RatFuncQ] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> Result<&RatFuncQ> {
        self.values.get(i).ok_or(Error::InsufficientLength {
            needed: i,
            available: self.values.len(),
        })
    }

    /// Grows the prefix so that index `upto` is available.
    pub fn extend_to(&mut self, upto: usize) {
        if self.values.len() > upto {
            return;
        }
        match self.id {
            SeqId::Qeuler => {
                while self.values.len() <= upto {
                    let n = self.values.len();
                    let next = euler_next(&self.values, n);
                    self.values.push(next);
                }
            }
            SeqId::Qbernoulli => {
                while self.values.len() <= upto {
                    let n = self.values.len();
                    let next = bernoulli_next(&self.values, n);
                    self.values.push(next);
                }
            }
            SeqId::ThetaEll(ell) => {
                let all = crate::functionals::theta_moments(ell as usize, upto);
                let have = self.values.len();
                self.values.extend(all.into_iter().skip(have));
            }
            SeqId::XiEll(ell) => {
                for n in self.values.len()..=upto {
                    self.values.push(crate::functionals::xi_moment(ell as usize, n));
                }
            }
        }
    }
}

/// Pascal-rule row `C(n, 0..=n)`.
fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// `C(n, k)` by the multiplicative formula.
fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `eps_n = (1-q)^{-n} sum_k (-1)^k C(n,k) (1+q) / (1+q^{k+1})`.
pub fn q_euler_explicit(n: usize) -> RatFuncQ {
    let one_plus_q = RatFuncQ::one_plus_signed_q_pow(1, 1);
    let sum: RatFuncQ = (0..=n)
        .map(|k| {
            let c = binomial(n, k);
            let c = if k % 2 == 1 { -c } else { c };
            let term = &one_plus_q / &RatFuncQ::one_plus_signed_q_pow(1, k + 1);
            term.scale_int(&c)
        })
        .sum();
    let one_minus_q = RatFuncQ::from_poly(QPoly::from_i64s(&[1, -1]));
    &sum / &one_minus_q.pow(n as i64).unwrap()
}

fn euler_next(prev: &[RatFuncQ], n: usize) -> RatFuncQ {
    if n == 0 {
        return RatFuncQ::one();
    }
    let row = pascal_row(n);
    let s: RatFuncQ = prev
        .iter()
        .enumerate()
        .map(|(k, e)| (&RatFuncQ::q_pow(k as i64 + 1) * e).scale_int(&row[k]))
        .sum();
    -(&s / &RatFuncQ::one_plus_signed_q_pow(1, n + 1))
}

/// `eps_0 .. eps_n` from `sum_{k<=n} C(n,k) q^{k+1} eps_k + eps_n = 0`.
pub fn q_euler_sequence(n: usize) -> Vec<RatFuncQ> {
    MomentSeq::new(SeqId::Qeuler, n).values
}

/// `eps_n` by the recursion, solved for the top term.
pub fn q_euler_recursive(n: usize) -> RatFuncQ {
    q_euler_sequence(n).pop().unwrap()
}

/// `beta_n = (1-q)^{-n} sum_k (-1)^k C(n,k) (k+1) / [k+1]_q`.
pub fn q_bernoulli_explicit(n: usize) -> RatFuncQ {
    let one_minus_q = QPoly::from_i64s(&[1, -1]);
    let sum: RatFuncQ = (0..=n)
        .map(|k| {
            let c = binomial(n, k) * (k + 1);
            let c = if k % 2 == 1 { -c } else { c };
            // (k+1)/[k+1]_q = (k+1)(1-q)/(1-q^{k+1})
            RatFuncQ::new(one_minus_q.scale(&c), QPoly::one_plus_signed_power(-1, k + 1))
                .expect("1 - q^{k+1} is nonzero")
        })
        .sum();
    &sum / &RatFuncQ::from_poly(one_minus_q.pow(n as u32))
}

fn bernoulli_next(prev: &[RatFuncQ], n: usize) -> RatFuncQ {
    if n == 0 {
        return RatFuncQ::one();
    }
    let row = pascal_row(n);
    let s: RatFuncQ = prev
        .iter()
        .enumerate()
        .map(|(k, b)| (&RatFuncQ::q_pow(k as i64 + 1) * b).scale_int(&row[k]))
        .sum();
    let rhs = if n == 1 { RatFuncQ::one() } else { RatFuncQ::zero() };
    // (q^{n+1} - 1) beta_n = rhs - s
    &(&rhs - &s) / &RatFuncQ::from_poly(-QPoly::one_plus_signed_power(-1, n + 1))
}

/// `beta_0 .. beta_n` from the recursion.
pub fn q_bernoulli_sequence(n: usize) -> Vec<RatFuncQ> {
    MomentSeq::new(SeqId::Qbernoulli, n).values
}

pub fn q_bernoulli_recursive(n: usize) -> RatFuncQ {
    q_bernoulli_sequence(n).pop().unwrap()
}

/// Value of the `n`-th term at `q = 1`.
pub fn limit_q1(id: SeqId, n: usize) -> Result<BigRational> {
    let seq = MomentSeq::new(id, n);
    seq.get(n)?.eval_at(&BigRational::one())
}

/// The classical q = 1 values `E_n(0)` listed for `n = 0..=9`.
pub fn euler_q1_reference() -> Vec<BigRational> {
    [(1, 1), (-1, 2), (0, 1), (1, 4), (0, 1), (-1, 2), (0, 1), (17, 8), (0, 1), (-31, 2)]
        .iter()
        .map(|&(a, b)| BigRational::new(a.into(), b.into()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFuncQ {
        RatFuncQ::new(QPoly::from_i64s(n), QPoly::from_i64s(d)).unwrap()
    }

    #[test]
    fn euler_small_values() {
        assert_eq!(q_euler_explicit(0), RatFuncQ::one());
        assert_eq!(q_euler_recursive(0), RatFuncQ::one());
        let eps1 = rf(&[0, -1], &[1, 0, 1]);
        assert_eq!(q_euler_explicit(1), eps1);
        assert_eq!(q_euler_recursive(1), eps1);
        // -q (1 - q^2) / ((1 + q^2)(1 + q^3))
        let eps2 = rf(&[0, -1, 0, 1], &[1, 0, 1, 1, 0, 1]);
        assert_eq!(q_euler_explicit(2), eps2);
        assert_eq!(q_euler_recursive(2), eps2);
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(q_bernoulli_explicit(0), RatFuncQ::one());
        assert_eq!(q_bernoulli_recursive(1), rf(&[-1], &[1, 1]));
        assert_eq!(q_bernoulli_explicit(1), rf(&[-1], &[1, 1]));
        // beta_2 = q / ((1+q)(1+q+q^2))
        assert_eq!(q_bernoulli_recursive(2), rf(&[0, 1], &[1, 2, 2, 1]));
    }

    #[test]
    fn explicit_matches_recursive() {
        let eps = q_euler_sequence(20);
        let beta = q_bernoulli_sequence(20);
        for n in 0..=20 {
            assert_eq!(q_euler_explicit(n), eps[n], "eps_{n}");
            assert_eq!(q_bernoulli_explicit(n), beta[n], "beta_{n}");
        }
    }

    #[test]
    fn q1_limits() {
        let reference = euler_q1_reference();
        for (n, expected) in reference.iter().enumerate() {
            assert_eq!(&limit_q1(SeqId::Qeuler, n).unwrap(), expected, "n = {n}");
        }
        assert_eq!(
            limit_q1(SeqId::Qbernoulli, 1).unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
    }

    #[test]
    fn sequence_ids_parse() {
        for id in [SeqId::Qeuler, SeqId::Qbernoulli, SeqId::ThetaEll(2), SeqId::XiEll(0)] {
            assert_eq!(id.to_string().parse::<SeqId>().unwrap(), id);
        }
        assert!("foo".parse::<SeqId>().is_err());
    }

    #[test]
    fn moment_seq_access() {
        let mut s = MomentSeq::new(SeqId::Qeuler, 2);
        assert_eq!(s.len(), 3);
        assert!(matches!(s.get(3), Err(Error::InsufficientLength { needed: 3, available: 3 })));
        let before = s.values().to_vec();
        s.extend_to(5);
        assert_eq!(&s.values()[..3], &before[..]);
        assert_eq!(s.len(), 6);
    }
}
