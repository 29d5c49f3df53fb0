//! The specialized big q-Jacobi polynomials `J_{l,n}`, their monic
//! normalization `Jt_{l,n}`, and the rescaled family `P_{l,n}`.
//!
//! Every family can be produced two ways: from its terminating `3phi2`
//! definition and from its three-term recurrence. `P` additionally arises as
//! an affine change of variable of `Jt`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::favard::{three_term_build, FavardData};
use super::zpoly::ZPoly;
use crate::error::{Error, Result};
use crate::qkit::poch_monomial;
use crate::ratcore::{parity_sign, QPoly, RatFuncQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// `J_{l,n}`, not monic.
    BigQJacobiJ,
    /// `Jt_{l,n}`, monic.
    MonicJtilde,
    /// `P_{l,n}`, monic.
    PFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub ell: u32,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, ell: u32) -> Self {
        FamilyId { kind, ell }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            FamilyKind::BigQJacobiJ => "J",
            FamilyKind::MonicJtilde => "Jtilde",
            FamilyKind::PFamily => "P",
        };
        write!(f, "{k}[{}]", self.ell)
    }
}

fn qp(e: i64) -> RatFuncQ {
    RatFuncQ::q_pow(e)
}

/// `1 + sign q^e`, any integer `e`.
fn one_plus(sign: i64, e: i64) -> RatFuncQ {
    if e >= 0 {
        RatFuncQ::one_plus_signed_q_pow(sign, e as usize)
    } else {
        &RatFuncQ::one() + &RatFuncQ::signed_q_pow(sign, e)
    }
}

fn one_minus_q() -> RatFuncQ {
    RatFuncQ::from_poly(QPoly::from_i64s(&[1, -1]))
}

/// `(A_{l,n}, B_{l,n})` of the non-monic recurrence
/// `A J_{n+1} = (A + B - 1 + z) J_n - B J_{n-1}`.
pub fn coeffs_ab(ell: usize, n: usize) -> (RatFuncQ, RatFuncQ) {
    let (l, n) = (ell as i64, n as i64);
    let a = &one_plus(-1, 2 * n + 2 * l + 2) / &(&one_plus(1, 2 * n + l + 1) * &one_plus(1, 2 * n + l + 2));
    let b_num = &qp(2 * n + 2 * l + 1) * &one_plus(-1, 2 * n);
    let b_den = &one_plus(1, 2 * n + l) * &one_plus(1, 2 * n + l + 1);
    (a, -(&b_num / &b_den))
}

/// `(at_{l,n}, bt_{l,n})` of the monic recurrence for `Jt`. `bt` is only
/// meaningful for `n >= 1` (it vanishes at `n = 0`).
pub fn coeffs_monic(ell: usize, n: usize) -> (RatFuncQ, RatFuncQ) {
    (monic_a(ell, n), monic_b(ell, n))
}

fn monic_a(ell: usize, n: usize) -> RatFuncQ {
    let (l, n) = (ell as i64, n as i64);
    let num = &(&qp(2 * n + l + 1) * &one_plus(1, 1)) * &one_plus(1, l);
    let den = &one_plus(1, 2 * n + l) * &one_plus(1, 2 * n + l + 2);
    -(&num / &den)
}

fn monic_b(ell: usize, n: usize) -> RatFuncQ {
    let (l, n) = (ell as i64, n as i64);
    let num = &(&qp(2 * n + 2 * l + 1) * &one_plus(-1, 2 * n)) * &one_plus(-1, 2 * n + 2 * l);
    let mid = one_plus(1, 2 * n + l);
    let den = &(&(&one_plus(1, 2 * n + l - 1) * &mid) * &mid) * &one_plus(1, 2 * n + l + 1);
    -(&num / &den)
}

/// `(a_{l,n}, b_{l,n})` of the monic recurrence for `P`. `b` is meaningful
/// for `n >= 1`.
pub fn coeffs_p(ell: usize, n: usize) -> (RatFuncQ, RatFuncQ) {
    (p_a(ell, n), p_b(ell, n))
}

fn p_a(ell: usize, n: usize) -> RatFuncQ {
    let (l, n) = (ell as i64, n as i64);
    let omq = one_minus_q();
    let num = &(&qp(2 * n + l) * &one_plus(1, 1)) * &one_plus(1, l);
    let den = &(&omq * &one_plus(1, 2 * n + l)) * &one_plus(1, 2 * n + l + 2);
    &(&num / &den) - &omq.inv().unwrap()
}

fn p_b(ell: usize, n: usize) -> RatFuncQ {
    let (l, n) = (ell as i64, n as i64);
    let omq = one_minus_q();
    let num = &(&qp(2 * n + 2 * l - 1) * &one_plus(-1, 2 * n)) * &one_plus(-1, 2 * n + 2 * l);
    let mid = one_plus(1, 2 * n + l);
    let den = &(&(&(&(&omq * &omq) * &one_plus(1, 2 * n + l - 1)) * &mid) * &mid) * &one_plus(1, 2 * n + l + 1);
    -(&num / &den)
}

/// Recurrence data of `Jt_{l,.}` with `mu0 = 1`.
pub fn favard_jtilde(ell: usize) -> FavardData {
    FavardData::from_formulas(RatFuncQ::one(), move |n| monic_a(ell, n), move |n| monic_b(ell, n))
}

/// Recurrence data of `P_{l,.}` with `mu0 = 1`.
pub fn favard_p(ell: usize) -> FavardData {
    FavardData::from_formulas(RatFuncQ::one(), move |n| p_a(ell, n), move |n| p_b(ell, n))
}

/// `(w; q)_k` for every `k <= upto`, with `w` a polynomial in `z`.
fn zpoly_poch_table(w: &ZPoly, upto: usize) -> Vec<ZPoly> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(ZPoly::one());
    for j in 0..upto {
        let factor = &ZPoly::one() - &w.scale(&qp(j as i64));
        let next = &out[j] * &factor;
        out.push(next);
    }
    out
}

/// `sum_{k=0}^n (q^{-n}, -q^{n+l+1}; q)_k q^k / (q, q^{l+1}; q)_k * (w; q)_k`,
/// the `3phi2` shared by `J` and `P`.
fn phi32_with_parameter(ell: usize, n: usize, w: &ZPoly) -> ZPoly {
    let (l, ni) = (ell as i64, n as i64);
    let pochs = zpoly_poch_table(w, n);
    let one = RatFuncQ::one();
    let mut c = RatFuncQ::one();
    let mut acc = ZPoly::one();
    for k in 0..n {
        let ki = k as i64;
        let num = &(&(&one - &qp(ki - ni)) * &one_plus(1, ni + l + 1 + ki)) * &qp(1);
        let den = &one_plus(-1, ki + 1) * &one_plus(-1, l + 1 + ki);
        c = &c * &(&num / &den);
        acc = &acc + &pochs[k + 1].scale(&c);
    }
    acc
}

/// `J_{l,n}(z)` from its `3phi2` definition.
pub fn build_j_via_phi(ell: usize, n: usize) -> ZPoly {
    phi32_with_parameter(ell, n, &ZPoly::z())
}

fn jtilde_scale(ell: usize, n: usize) -> RatFuncQ {
    let l = ell as i64;
    &poch_monomial(1, l + 1, 1, n) / &poch_monomial(-1, n as i64 + l + 1, 1, n)
}

/// `Jt_{l,n}(z) = (q^{l+1};q)_n / (-q^{n+l+1};q)_n * J_{l,n}(z)`.
pub fn build_jtilde_via_phi(ell: usize, n: usize) -> ZPoly {
    build_j_via_phi(ell, n).scale(&jtilde_scale(ell, n))
}

/// `P_{l,n}(z)` from its `3phi2` definition with parameter
/// `q(1 - (1 - q) z)`.
pub fn build_p_via_phi2(ell: usize, n: usize) -> ZPoly {
    let w = ZPoly::linear(qp(1), RatFuncQ::from_poly(QPoly::from_i64s(&[0, -1, 1])));
    let series = phi32_with_parameter(ell, n, &w);
    let l = ell as i64;
    let ni = n as i64;
    let pre_num = poch_monomial(1, l + 1, 1, n).scale_int(&parity_sign(n as u64).into());
    let pre_den = &(&qp(ni) * &one_minus_q().pow(ni).unwrap()) * &poch_monomial(-1, ni + l + 1, 1, n);
    series.scale(&(&pre_num / &pre_den))
}

/// `J_{l,0..=upto}` from the `A/B` recurrence.
pub fn build_j_via_recurrence(ell: usize, upto: usize) -> Vec<ZPoly> {
    let mut out = vec![ZPoly::one()];
    for n in 0..upto {
        let (a, b) = coeffs_ab(ell, n);
        let lin = ZPoly::linear(&(&a + &b) - &RatFuncQ::one(), RatFuncQ::one());
        let mut rhs = &lin * &out[n];
        if n > 0 {
            rhs = &rhs - &out[n - 1].scale(&b);
        }
        out.push(rhs.scale(&a.inv().expect("A_{l,n} is nonzero")));
    }
    out
}

/// `[p_0, ..., p_upto]` of a family through its recurrence.
pub fn family_polys(family: FamilyId, upto: usize) -> Result<Vec<ZPoly>> {
    let ell = family.ell as usize;
    match family.kind {
        FamilyKind::BigQJacobiJ => Ok(build_j_via_recurrence(ell, upto)),
        FamilyKind::MonicJtilde => three_term_build(&favard_jtilde(ell), upto),
        FamilyKind::PFamily => three_term_build(&favard_p(ell), upto),
    }
}

/// `r_n(z) = u^{-n} p_n(u z + v)`.
pub fn affine_transform(p: &[ZPoly], u: &RatFuncQ, v: &RatFuncQ) -> Result<Vec<ZPoly>> {
    let u_inv = u.inv().map_err(|_| Error::OutOfRange("affine transform needs u != 0".into()))?;
    let mut scale = RatFuncQ::one();
    let mut out = Vec::with_capacity(p.len());
    for poly in p {
        out.push(poly.compose_affine(u, v).scale(&scale));
        scale = &scale * &u_inv;
    }
    Ok(out)
}

/// Recurrence data of the transformed family: `(u^{-1}(a_n + v), u^{-2} b_n)`.
pub fn affine_transform_data(data: &FavardData, u: &RatFuncQ, v: &RatFuncQ) -> Result<FavardData> {
    let u_inv = u.inv().map_err(|_| Error::OutOfRange("affine transform needs u != 0".into()))?;
    let u_inv2 = &u_inv * &u_inv;
    let (d1, d2, v) = (data.clone(), data.clone(), v.clone());
    Ok(FavardData::from_formulas(
        data.mu0().clone(),
        move |n| &u_inv * &(&d1.a(n).expect("a_n") + &v),
        move |n| &u_inv2 * &d2.b(n).expect("b_n"),
    ))
}

/// `P_{l,n} = u^{-n} Jt_{l,n}(u z + v)` with `u = q^2 - q`, `v = q`.
pub fn p_from_jtilde(jt: &[ZPoly]) -> Result<Vec<ZPoly>> {
    let u = RatFuncQ::from_poly(QPoly::from_i64s(&[0, -1, 1]));
    affine_transform(jt, &u, &qp(1))
}

/// Closed form of `P_{1,n}(0)`:
/// `(-1)^{n+1} (q;q)_n / ((1-q)^n (-q^{n+1};q)_{n+1}) * (-1 + (-1)^{n+1} q^{(n+1)^2})`.
pub fn p1_at_zero_closed(n: usize) -> RatFuncQ {
    let sign = parity_sign(n as u64 + 1);
    let ni = n as i64;
    let front = &poch_monomial(1, 1, 1, n).scale_int(&sign.into())
        / &(&one_minus_q().pow(ni).unwrap() * &poch_monomial(-1, ni + 1, 1, n + 1));
    let tail = &RatFuncQ::from_int(-1) + &RatFuncQ::signed_q_pow(sign, (ni + 1) * (ni + 1));
    &front * &tail
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkit::{poch, q_binom};
    use num_rational::BigRational;
    use num_traits::One;

    fn rf(n: &[i64], d: &[i64]) -> RatFuncQ {
        RatFuncQ::new(QPoly::from_i64s(n), QPoly::from_i64s(d)).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        for ell in 0..4 {
            assert!(coeffs_ab(ell, 0).1.is_zero());
        }
        assert_eq!(coeffs_ab(0, 0).0, rf(&[1, -1], &[1, 0, 1]));
        assert_eq!(coeffs_monic(0, 0).0, rf(&[0, -1, -1], &[1, 0, 1]));
        assert_eq!(coeffs_p(0, 0).0, rf(&[0, 1], &[1, 0, 1]));
        // -q(1+q) / ((1+q^2)^2 (1+q^3))
        let den = &(&QPoly::from_i64s(&[1, 0, 1]) * &QPoly::from_i64s(&[1, 0, 1])) * &QPoly::from_i64s(&[1, 0, 0, 1]);
        assert_eq!(coeffs_p(0, 1).1, RatFuncQ::new(QPoly::from_i64s(&[0, -1, -1]), den).unwrap());
        for ell in 0..4 {
            for n in 1..8 {
                assert!(!coeffs_monic(ell, n).1.is_zero());
                assert!(!coeffs_p(ell, n).1.is_zero());
            }
        }
    }

    #[test]
    fn ab_finite_at_q1() {
        let one = BigRational::one();
        for ell in 0..=4 {
            for n in 0..=4 {
                let (a, b) = coeffs_ab(ell, n);
                assert!(a.eval_at(&one).is_ok());
                assert!(b.eval_at(&one).is_ok());
            }
        }
    }

    #[test]
    fn p_first_polys() {
        assert_eq!(build_p_via_phi2(2, 0), ZPoly::one());
        let p01 = ZPoly::linear(rf(&[0, 1], &[1, 0, 1]), RatFuncQ::one());
        assert_eq!(build_p_via_phi2(0, 1), p01);
        assert_eq!(family_polys(FamilyId::new(FamilyKind::PFamily, 0), 1).unwrap()[1], p01);
    }

    #[test]
    fn three_routes_for_p_agree() {
        for ell in 0..=3usize {
            let rec = family_polys(FamilyId::new(FamilyKind::PFamily, ell as u32), 8).unwrap();
            let jt = family_polys(FamilyId::new(FamilyKind::MonicJtilde, ell as u32), 8).unwrap();
            let aff = p_from_jtilde(&jt).unwrap();
            for n in 0..=8 {
                let phi = build_p_via_phi2(ell, n);
                assert_eq!(phi, rec[n], "l={ell} n={n} phi vs recurrence");
                assert_eq!(aff[n], rec[n], "l={ell} n={n} affine vs recurrence");
                assert!(rec[n].is_monic());
                assert_eq!(rec[n].degree(), Some(n));
            }
        }
    }

    #[test]
    fn jtilde_scaling_matches_recurrence() {
        for ell in 0..=3usize {
            let rec = family_polys(FamilyId::new(FamilyKind::MonicJtilde, ell as u32), 8).unwrap();
            for n in 0..=8 {
                assert_eq!(build_jtilde_via_phi(ell, n), rec[n], "l={ell} n={n}");
            }
        }
    }

    #[test]
    fn j_satisfies_ab_recurrence() {
        for ell in 0..=3usize {
            let js: Vec<ZPoly> = (0..=7).map(|n| build_j_via_phi(ell, n)).collect();
            for n in 1..=6 {
                let (a, b) = coeffs_ab(ell, n);
                let lhs = js[n + 1].scale(&a);
                let lin = ZPoly::linear(&(&a + &b) - &RatFuncQ::one(), RatFuncQ::one());
                let rhs = &(&lin * &js[n]) - &js[n - 1].scale(&b);
                assert_eq!(lhs, rhs, "l={ell} n={n}");
            }
            assert_eq!(build_j_via_recurrence(ell, 7), js);
        }
    }

    #[test]
    fn affine_map_on_recurrence_data() {
        let u = RatFuncQ::from_poly(QPoly::from_i64s(&[0, -1, 1]));
        let v = qp(1);
        for ell in 0..=2 {
            let data = affine_transform_data(&favard_jtilde(ell), &u, &v).unwrap();
            let via_data = three_term_build(&data, 6).unwrap();
            let via_polys = family_polys(FamilyId::new(FamilyKind::PFamily, ell as u32), 6).unwrap();
            assert_eq!(via_data, via_polys);
        }
        let p = family_polys(FamilyId::new(FamilyKind::PFamily, 1), 3).unwrap();
        assert_eq!(affine_transform(&p, &RatFuncQ::one(), &RatFuncQ::zero()).unwrap(), p);
        assert!(affine_transform(&p, &RatFuncQ::zero(), &RatFuncQ::one()).is_err());
    }

    #[test]
    fn p1_zero_closed_form() {
        assert_eq!(p1_at_zero_closed(0), RatFuncQ::one());
        let p1 = family_polys(FamilyId::new(FamilyKind::PFamily, 1), 8).unwrap();
        assert_eq!(p1_at_zero_closed(1), coeffs_p(1, 0).0);
        for n in 0..=8 {
            assert_eq!(p1_at_zero_closed(n), build_p_via_phi2(1, n).eval(&RatFuncQ::zero()), "n={n}");
            assert_eq!(p1_at_zero_closed(n), p1[n].coeff(0));
        }
    }

    #[test]
    fn q_binomial_theorem_as_zpoly() {
        for n in 0..=8usize {
            let lhs = zpoly_poch_table(&ZPoly::z(), n).pop().unwrap();
            let mut rhs = ZPoly::zero();
            for k in 0..=n {
                let c = &RatFuncQ::signed_q_pow(parity_sign(k as u64), (k * k.saturating_sub(1) / 2) as i64)
                    * &q_binom(n as i64, k as i64);
                rhs = &rhs + &ZPoly::monomial(c, k);
            }
            assert_eq!(lhs, rhs, "n={n}");
            // the constant-in-z check against the scalar Pochhammer
            assert_eq!(lhs.eval(&qp(2)), poch(&qp(2), n));
        }
    }
}
