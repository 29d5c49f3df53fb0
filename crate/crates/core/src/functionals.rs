//! Moment functionals on `Q(q)[z]`.
//!
//! `Phi` and `Theta_l` are defined on the q-binomial basis
//! `[n, z choose n]_q`; `Xi_l` directly by its moments; `Phi_l` by the
//! shifted q-Euler moments `eps_{n+l}`. Internally every functional is
//! applied through its monomial moments.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::carlitz::q_euler_sequence;
use crate::error::{Error, Result};
use crate::orthopoly::{family_polys, FamilyId, FamilyKind, ZPoly};
use crate::qkit::{poch_monomial, q_binom, q_factorial, q_int};
use crate::ratcore::{parity_sign, RatFuncQ};

/// `[m, z choose n]_q = (1/[n]_q!) prod_{k=m-n+1}^{m} ([k]_q + q^k z)`.
pub fn qbinom_basis(m: i64, n: usize) -> ZPoly {
    let mut acc = ZPoly::one();
    for k in (m - n as i64 + 1)..=m {
        acc = &acc * &ZPoly::linear(q_int(k), RatFuncQ::q_pow(k));
    }
    let fact = q_factorial(n as i64).expect("n is nonnegative");
    acc.scale(&fact.inv().expect("q-factorials are nonzero"))
}

/// Coefficients `c_n` with `P = sum_n c_n [n, z choose n]_q`.
pub fn to_diagonal_basis(p: &ZPoly) -> Vec<RatFuncQ> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let basis: Vec<ZPoly> = (0..=deg).map(|n| qbinom_basis(n as i64, n)).collect();
    let mut rest = p.clone();
    let mut out = vec![RatFuncQ::zero(); deg + 1];
    for n in (0..=deg).rev() {
        let c = &rest.coeff(n) / &basis[n].lc();
        if !c.is_zero() {
            rest = &rest - &basis[n].scale(&c);
        }
        out[n] = c;
    }
    debug_assert!(rest.is_zero());
    out
}

/// Diagonal-basis expansions of `z^0, ..., z^upto`, using
/// `z b_k = [k+1]_q q^{-(k+1)} (b_{k+1} - b_k)`.
fn monomials_in_basis(upto: usize) -> Vec<Vec<RatFuncQ>> {
    let steps: Vec<RatFuncQ> = (0..upto)
        .map(|k| &q_int(k as i64 + 1) * &RatFuncQ::q_pow(-(k as i64) - 1))
        .collect();
    let mut out = vec![vec![RatFuncQ::one()]];
    for n in 0..upto {
        let prev = &out[n];
        let mut next = vec![RatFuncQ::zero(); n + 2];
        for (k, c) in prev.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = c * &steps[k];
            next[k + 1] = &next[k + 1] + &t;
            next[k] = &next[k] - &t;
        }
        out.push(next);
    }
    out
}

/// Monomial moments `L(z^0..z^upto)` of a functional given on the basis.
fn moments_from_basis(upto: usize, on_basis: impl Fn(usize) -> RatFuncQ + Sync) -> Vec<RatFuncQ> {
    let values: Vec<RatFuncQ> = (0..=upto).into_par_iter().map(&on_basis).collect();
    monomials_in_basis(upto)
        .into_par_iter()
        .map(|row| row.iter().zip(&values).map(|(c, v)| c * v).sum())
        .collect()
}

/// `Phi([n, z choose n]_q) = 1 / (-q^2; q)_n`.
pub fn phi_on_basis(n: usize) -> RatFuncQ {
    poch_monomial(-1, 2, 1, n).inv().expect("(-q^2;q)_n is nonzero")
}

/// `Phi(P)` through the diagonal basis.
pub fn phi(p: &ZPoly) -> RatFuncQ {
    to_diagonal_basis(p)
        .iter()
        .enumerate()
        .map(|(n, c)| c * &phi_on_basis(n))
        .sum()
}

/// `Phi(P)` by replacing `z^k` with `eps_k`.
pub fn phi_via_moments(p: &ZPoly) -> RatFuncQ {
    let eps = q_euler_sequence(p.degree().unwrap_or(0));
    apply_moments(p, &eps).expect("enough moments")
}

/// `Phi(z^0), ..., Phi(z^upto)` computed on the basis side.
pub fn phi_moments(upto: usize) -> Vec<RatFuncQ> {
    moments_from_basis(upto, phi_on_basis)
}

/// `Phi([m, z choose n]_q) = (-1)^{n-m} q^{n-m} / (-q^2; q)_n` for `0 <= m <= n`.
pub fn phi_closed_m_n(m: usize, n: usize) -> Result<RatFuncQ> {
    if m > n {
        return Err(Error::OutOfRange(format!("need m <= n, got m={m} n={n}")));
    }
    let d = (n - m) as i64;
    Ok(&RatFuncQ::signed_q_pow(parity_sign(d as u64), d) * &phi_on_basis(n))
}

/// `Phi([n+1, z choose n]_q) = (1+q)/q - 1/(q (-q^2; q)_n)`.
pub fn phi_closed_n1_n(n: usize) -> RatFuncQ {
    let q_inv = RatFuncQ::q_pow(-1);
    let first = &RatFuncQ::one_plus_signed_q_pow(1, 1) * &q_inv;
    &first - &(&q_inv * &phi_on_basis(n))
}

/// Checks `q Phi(P(1 + q z)) + Phi(P(z)) = (1 + q) P(0)`.
pub fn verify_phi_relation(p: &ZPoly) -> bool {
    let q = RatFuncQ::q();
    let shifted = p.compose_affine(&q, &RatFuncQ::one());
    let lhs = &(&q * &phi(&shifted)) + &phi(p);
    lhs == &RatFuncQ::one_plus_signed_q_pow(1, 1) * &p.coeff(0)
}

/// `Theta_l([n, z choose n]_q) = (q^{l+1}; q)_n / ((q; q)_n (-q^{l+2}; q)_n)`.
pub fn theta_on_basis(ell: usize, n: usize) -> RatFuncQ {
    let l = ell as i64;
    let den = &poch_monomial(1, 1, 1, n) * &poch_monomial(-1, l + 2, 1, n);
    &poch_monomial(1, l + 1, 1, n) / &den
}

/// `Theta_l(z^0), ..., Theta_l(z^upto)`.
pub fn theta_moments(ell: usize, upto: usize) -> Vec<RatFuncQ> {
    moments_from_basis(upto, |n| theta_on_basis(ell, n))
}

pub fn theta_moment(ell: usize, n: usize) -> RatFuncQ {
    theta_moments(ell, n).pop().expect("nonempty")
}

/// `xi_{l,n} = q^{(l+1) n} (-q; q)_n / (-q^{l+2}; q)_n`.
pub fn xi_moment(ell: usize, n: usize) -> RatFuncQ {
    let e = ((ell + 1) * n) as i64;
    let ratio = &poch_monomial(-1, 1, 1, n) / &poch_monomial(-1, ell as i64 + 2, 1, n);
    &RatFuncQ::q_pow(e) * &ratio
}

/// Checks `Xi_l((z; q)_n) = (q^{l+1}; q)_n / (-q^{l+2}; q)_n`, expanding
/// `(z; q)_n` by the q-binomial theorem.
pub fn verify_xi_on_poch(ell: usize, n: usize) -> bool {
    let lhs: RatFuncQ = (0..=n)
        .map(|k| {
            let c = RatFuncQ::signed_q_pow(parity_sign(k as u64), (k * k.saturating_sub(1) / 2) as i64);
            &(&c * &q_binom(n as i64, k as i64)) * &xi_moment(ell, k)
        })
        .sum();
    let l = ell as i64;
    lhs == &poch_monomial(1, l + 1, 1, n) / &poch_monomial(-1, l + 2, 1, n)
}

/// `sum_k P_k mu_k`.
pub fn apply_moments(p: &ZPoly, moments: &[RatFuncQ]) -> Result<RatFuncQ> {
    if p.coeffs().len() > moments.len() {
        return Err(Error::InsufficientLength {
            needed: p.coeffs().len() - 1,
            available: moments.len(),
        });
    }
    Ok(p.coeffs().iter().zip(moments).map(|(c, m)| c * m).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionalId {
    Phi,
    /// `Phi_l(z^n) = Phi(z^{n+l})`, `l` in `{0, 1}`.
    PhiEll(u32),
    ThetaEll(u32),
    XiEll(u32),
}

impl FunctionalId {
    /// Monomial moments `L(z^0..=z^upto)`.
    pub fn moments(&self, upto: usize) -> Result<Vec<RatFuncQ>> {
        Ok(match *self {
            FunctionalId::Phi => q_euler_sequence(upto),
            FunctionalId::PhiEll(l @ (0 | 1)) => q_euler_sequence(upto + l as usize)
                .into_iter()
                .skip(l as usize)
                .collect(),
            FunctionalId::PhiEll(l) => {
                return Err(Error::OutOfRange(format!("Phi_l needs l in {{0, 1}}, got {l}")))
            }
            FunctionalId::ThetaEll(l) => theta_moments(l as usize, upto),
            FunctionalId::XiEll(l) => (0..=upto).into_par_iter().map(|n| xi_moment(l as usize, n)).collect(),
        })
    }

    /// The family this functional orthogonalizes.
    pub fn partner(&self) -> Result<FamilyId> {
        Ok(match *self {
            FunctionalId::Phi => FamilyId::new(FamilyKind::PFamily, 0),
            FunctionalId::PhiEll(l @ (0 | 1)) => FamilyId::new(FamilyKind::PFamily, l),
            FunctionalId::PhiEll(l) => {
                return Err(Error::OutOfRange(format!("Phi_l needs l in {{0, 1}}, got {l}")))
            }
            FunctionalId::ThetaEll(l) => FamilyId::new(FamilyKind::PFamily, l),
            FunctionalId::XiEll(l) => FamilyId::new(FamilyKind::MonicJtilde, l),
        })
    }
}

impl fmt::Display for FunctionalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionalId::Phi => f.write_str("Phi"),
            FunctionalId::PhiEll(l) => write!(f, "Phi_{l}"),
            FunctionalId::ThetaEll(l) => write!(f, "Theta_{l}"),
            FunctionalId::XiEll(l) => write!(f, "Xi_{l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalityFailure {
    pub m: usize,
    pub n: usize,
    pub value: RatFuncQ,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    pub functional: String,
    pub family: String,
    pub upto: usize,
    pub failures: Vec<OrthogonalityFailure>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `L(p_0) != 0` and `L(p_m p_n) = 0` for all `0 <= m < n <= upto`.
///
/// The `m = 0` row is the plain condition `L(p_n) = 0`. Products are
/// expanded in full before `L` is applied. A failure at `(0, 0)` means
/// `L(p_0)` vanished.
pub fn verify_orthogonality(functional: FunctionalId, family: FamilyId, upto: usize) -> Result<OrthogonalityReport> {
    if functional.partner()? != family {
        return Err(Error::PairingMismatch {
            functional: functional.to_string(),
            family: family.to_string(),
        });
    }
    let polys = family_polys(family, upto)?;
    let moments = functional.moments(2 * upto)?;
    let pairs: Vec<(usize, usize)> = (0..=upto).flat_map(|n| (0..n).map(move |m| (m, n))).collect();
    let mut failures: Vec<OrthogonalityFailure> = pairs
        .into_par_iter()
        .map(|(m, n)| {
            let prod = &polys[m] * &polys[n];
            apply_moments(&prod, &moments).map(|value| OrthogonalityFailure { m, n, value })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|f| !f.value.is_zero())
        .collect();
    let l0 = apply_moments(&polys[0], &moments)?;
    if l0.is_zero() {
        failures.insert(0, OrthogonalityFailure { m: 0, n: 0, value: l0 });
    }
    Ok(OrthogonalityReport {
        functional: functional.to_string(),
        family: family.to_string(),
        upto,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carlitz::q_euler_explicit;
    use crate::orthopoly::build_p_via_phi2;
    use crate::ratcore::QPoly;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFuncQ {
        RatFuncQ::new(QPoly::from_i64s(n), QPoly::from_i64s(d)).unwrap()
    }

    fn int_zpoly(c: &[i64]) -> ZPoly {
        ZPoly::new(c.iter().map(|&x| RatFuncQ::from_int(x)).collect())
    }

    #[test]
    fn basis_examples() {
        assert_eq!(qbinom_basis(0, 0), ZPoly::one());
        assert_eq!(qbinom_basis(1, 1), ZPoly::linear(RatFuncQ::one(), RatFuncQ::q()));
        for n in 0..=5 {
            let shifted = qbinom_basis(n, n as usize).compose_affine(&RatFuncQ::q(), &RatFuncQ::one());
            assert_eq!(shifted, qbinom_basis(n + 1, n as usize));
            assert_eq!(qbinom_basis(n, n as usize).degree(), Some(n as usize));
        }
    }

    #[test]
    fn diagonal_basis_examples() {
        assert_eq!(to_diagonal_basis(&ZPoly::one()), vec![RatFuncQ::one()]);
        let qi = RatFuncQ::q_pow(-1);
        assert_eq!(to_diagonal_basis(&ZPoly::z()), vec![-&qi, qi]);
        let fast = monomials_in_basis(8);
        for (n, row) in fast.iter().enumerate() {
            assert_eq!(row, &to_diagonal_basis(&ZPoly::monomial(RatFuncQ::one(), n)), "n={n}");
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_on_basis(0), RatFuncQ::one());
        assert_eq!(phi_on_basis(1), rf(&[1], &[1, 0, 1]));
        assert_eq!(phi_on_basis(2), rf(&[1], &[1, 0, 1, 1, 0, 1]));
        assert_eq!(phi(&ZPoly::z()), rf(&[0, -1], &[1, 0, 1]));
        assert_eq!(phi(&ZPoly::one()), RatFuncQ::one());
        assert!(phi(&build_p_via_phi2(0, 1)).is_zero());
    }

    #[test]
    fn phi_of_monomials_is_q_euler() {
        let eps = q_euler_sequence(15);
        assert_eq!(phi_moments(15), eps);
        for n in 0..=6 {
            assert_eq!(phi(&ZPoly::monomial(RatFuncQ::one(), n)), q_euler_explicit(n));
        }
    }

    #[test]
    fn closed_forms_by_exhaustion() {
        for n in 0..=6usize {
            for m in 0..=n {
                let direct = phi(&qbinom_basis(m as i64, n));
                assert_eq!(phi_closed_m_n(m, n).unwrap(), direct, "m={m} n={n}");
            }
            assert_eq!(phi_closed_n1_n(n), phi(&qbinom_basis(n as i64 + 1, n)), "n={n}");
            assert_eq!(phi_closed_m_n(n, n).unwrap(), phi_on_basis(n));
        }
        assert_eq!(phi_closed_m_n(0, 1).unwrap(), rf(&[0, -1], &[1, 0, 1]));
        assert_eq!(phi_closed_n1_n(0), RatFuncQ::one());
        assert!(phi_closed_m_n(2, 1).is_err());
    }

    #[test]
    fn phi_relation_on_monomials() {
        assert!(verify_phi_relation(&ZPoly::one()));
        for n in 1..=8 {
            assert!(verify_phi_relation(&ZPoly::monomial(RatFuncQ::one(), n)));
        }
    }

    #[test]
    fn theta_intertwining() {
        let eps = q_euler_sequence(11);
        assert_eq!(theta_moment(0, 0), RatFuncQ::one());
        assert_eq!(theta_moments(0, 10), eps[..=10].to_vec());
        let t1 = theta_moments(1, 10);
        for n in 0..=10 {
            assert_eq!(t1[n], &eps[n + 1] / &eps[1], "n={n}");
        }
    }

    #[test]
    fn xi_examples() {
        for ell in 0..4 {
            assert_eq!(xi_moment(ell, 0), RatFuncQ::one());
        }
        assert_eq!(xi_moment(0, 1), rf(&[0, 1, 1], &[1, 0, 1]));
        for ell in 0..=3 {
            for n in 0..=8 {
                assert!(verify_xi_on_poch(ell, n), "l={ell} n={n}");
            }
        }
    }

    #[test]
    fn orthogonality_suites() {
        let r = verify_orthogonality(FunctionalId::Phi, FamilyId::new(FamilyKind::PFamily, 0), 8).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = verify_orthogonality(FunctionalId::PhiEll(1), FamilyId::new(FamilyKind::PFamily, 1), 8).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(FunctionalId::PhiEll(1).moments(0).unwrap()[0], q_euler_explicit(1));
        let r = verify_orthogonality(FunctionalId::ThetaEll(2), FamilyId::new(FamilyKind::PFamily, 2), 5).unwrap();
        assert!(r.passed(), "{r:?}");
        for ell in 0..=3 {
            let r = verify_orthogonality(FunctionalId::XiEll(ell), FamilyId::new(FamilyKind::MonicJtilde, ell), 6).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn orthogonality_detects_wrong_family_and_mismatch() {
        let r = verify_orthogonality(FunctionalId::ThetaEll(1), FamilyId::new(FamilyKind::PFamily, 2), 3);
        assert!(matches!(r, Err(Error::PairingMismatch { .. })));
        assert!(FunctionalId::PhiEll(2).moments(3).is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = verify_orthogonality(FunctionalId::XiEll(0), FamilyId::new(FamilyKind::MonicJtilde, 0), 2).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["functional"], "Xi_0");
        assert_eq!(v["family"], "Jtilde[0]");
        assert_eq!(v["upto"], 2);
        assert!(v["failures"].as_array().unwrap().is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn basis_round_trip(c in proptest::collection::vec(-9i64..=9, 0..=9)) {
            let p = int_zpoly(&c);
            let coeffs = to_diagonal_basis(&p);
            let mut back = ZPoly::zero();
            for (n, c) in coeffs.iter().enumerate() {
                back = &back + &qbinom_basis(n as i64, n).scale(c);
            }
            prop_assert_eq!(back, p);
        }

        #[test]
        fn phi_routes_agree(c in proptest::collection::vec(-9i64..=9, 0..=11)) {
            let p = int_zpoly(&c);
            prop_assert_eq!(phi(&p), phi_via_moments(&p));
        }

        #[test]
        fn phi_relation_random(c in proptest::collection::vec(-20i64..=20, 0..=9)) {
            prop_assert!(verify_phi_relation(&int_zpoly(&c)));
        }
    }
}
