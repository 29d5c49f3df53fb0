//! Hankel determinants over `Q(q)`: exact elimination, Heilermann's product
//! formula over a J-fraction, and the closed-form evaluations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::carlitz::{MomentSeq, SeqId};
use crate::error::{Error, Result};
use crate::orthopoly::{favard_jtilde, favard_p, p1_at_zero_closed, three_term_build, FavardData, ZPoly};
use crate::qkit::{poch_monomial, q_factorial};
use crate::ratcore::{parity_sign, poly_gcd, QPoly, RatFuncQ};

/// A J-fraction `mu0 / (1 + a_0 x - b_1 x^2 / (1 + a_1 x - ...))` carries
/// exactly the data of the three-term recurrence of its Favard polynomials.
pub type JFraction = FavardData;

pub type Matrix = Vec<Vec<RatFuncQ>>;

/// `(n+1) x (n+1)` matrix `M[i][j] = s_{i+j+shift}`.
pub fn hankel_matrix(seq: &MomentSeq, shift: usize, n: usize) -> Result<Matrix> {
    seq.get(2 * n + shift)?;
    Ok((0..=n)
        .map(|i| (0..=n).map(|j| seq.values()[i + j + shift].clone()).collect())
        .collect())
}

fn check_square(m: &Matrix) -> Result<()> {
    if m.iter().any(|row| row.len() != m.len()) {
        return Err(Error::OutOfRange("determinant of a non-square matrix".into()));
    }
    Ok(())
}

/// Exact determinant. Cofactor expansion up to dimension 3, fraction-free
/// elimination beyond.
pub fn det_exact(m: &Matrix) -> Result<RatFuncQ> {
    check_square(m)?;
    if m.len() <= 3 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}

/// Laplace expansion along the first row, for dimension at most 3.
pub fn det_cofactor(m: &Matrix) -> Result<RatFuncQ> {
    check_square(m)?;
    Ok(match m.len() {
        0 => RatFuncQ::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        3 => {
            let minor = |a: usize, b: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][b] * &m[2][a]);
            let t0 = &m[0][0] * &minor(1, 2);
            let t1 = &m[0][1] * &minor(0, 2);
            let t2 = &m[0][2] * &minor(0, 1);
            &(&t0 - &t1) + &t2
        }
        d => return Err(Error::OutOfRange(format!("cofactor expansion is limited to dimension 3, got {d}"))),
    })
}

fn poly_lcm(a: &QPoly, b: &QPoly) -> QPoly {
    let g = poly_gcd(a, b);
    a * &b.div_exact(&g).expect("a primitive gcd divides in Z[q]")
}

/// Clears each row to a common denominator in `Z[q]`, runs Bareiss
/// elimination on the integer-polynomial matrix and divides the cleared
/// factors back out.
pub fn det_bareiss(m: &Matrix) -> Result<RatFuncQ> {
    check_square(m)?;
    let n = m.len();
    if n == 0 {
        return Ok(RatFuncQ::one());
    }
    let mut cleared = QPoly::one();
    let mut a: Vec<Vec<QPoly>> = Vec::with_capacity(n);
    for row in m {
        let l = row.iter().fold(QPoly::one(), |acc, x| poly_lcm(&acc, x.den()));
        let ints = row
            .iter()
            .map(|x| x.num() * &l.div_exact(x.den()).expect("lcm is a common multiple"))
            .collect();
        cleared = &cleared * &l;
        a.push(ints);
    }
    let det = bareiss_int(a);
    RatFuncQ::new(det, cleared)
}

/// Fraction-free determinant of a square matrix over `Z[q]`.
fn bareiss_int(mut a: Vec<Vec<QPoly>>) -> QPoly {
    let n = a.len();
    let mut negate = false;
    let mut prev = QPoly::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return QPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss divisions are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// `det(mu_{i+j}) = mu0^{n+1} b_1^n b_2^{n-1} ... b_n`.
pub fn det_heilermann(jf: &JFraction, n: usize) -> Result<RatFuncQ> {
    let mut acc = jf.mu0().pow(n as i64 + 1)?;
    for k in 1..=n {
        acc = &acc * &jf.b(k)?.pow((n + 1 - k) as i64)?;
    }
    Ok(acc)
}

/// `det(mu_{i+j+1}) = det(mu_{i+j}) (-1)^{n+1} p_{n+1}(0)`, with `p` the
/// Favard polynomials of `jf`.
pub fn det_shifted_via_favard(jf: &JFraction, n: usize) -> Result<RatFuncQ> {
    let p = three_term_build(jf, n + 1)?;
    let base = det_heilermann(jf, n)?;
    Ok((&base * &p[n + 1].coeff(0)).scale_int(&parity_sign(n as u64 + 1).into()))
}

/// `det(eps_{i+j+2})` through the closed form of `P_{1,n+1}(0)` instead of
/// building the polynomial.
pub fn det_shift2_via_p1_closed(n: usize) -> Result<RatFuncQ> {
    let base = det_heilermann(&jfraction_for_eps(1)?, n)?;
    Ok((&base * &p1_at_zero_closed(n + 1)).scale_int(&parity_sign(n as u64 + 1).into()))
}

/// J-fraction of `sum_k eps_{k+l} x^k` for `l` in `{0, 1}`: `mu0 = eps_l`
/// with the recurrence data of `P_{l,.}`.
pub fn jfraction_for_eps(ell: usize) -> Result<JFraction> {
    if ell > 1 {
        return Err(Error::OutOfRange(format!("the q-Euler J-fraction needs l in {{0, 1}}, got {ell}")));
    }
    let mu0 = MomentSeq::new(SeqId::Qeuler, ell).values()[ell].clone();
    Ok(favard_p(ell).with_mu0(mu0))
}

/// J-fraction of `sum_k xi_{l,k} x^k`: `mu0 = 1` with the data of `Jt_{l,.}`.
pub fn jfraction_for_xi(ell: usize) -> JFraction {
    favard_jtilde(ell)
}

/// J-fraction of the `Theta_l` moments: `mu0 = 1` with the data of `P_{l,.}`.
pub fn jfraction_for_theta(ell: usize) -> JFraction {
    favard_p(ell)
}

/// Power-series coefficients `mu_0 .. mu_order` of a J-fraction.
///
/// `a_k` first influences `x^{2k+1}` and `b_k` first influences `x^{2k}`, so
/// the fraction is cut at level `order / 2` and every intermediate is
/// truncated at degree `order`. The result is exact.
pub fn jfraction_expand(jf: &JFraction, order: usize) -> Result<Vec<RatFuncQ>> {
    let top = order / 2;
    let trunc = |p: ZPoly| ZPoly::new(p.coeffs().iter().take(order + 1).cloned().collect());
    let level = |k: usize| -> Result<ZPoly> {
        let a = if 2 * k < order { jf.a(k)? } else { RatFuncQ::zero() };
        Ok(ZPoly::linear(RatFuncQ::one(), a))
    };
    // F_k = N_k / D_k with F_k = 1 + a_k x - b_{k+1} x^2 / F_{k+1}
    let mut num = level(top)?;
    let mut den = ZPoly::one();
    for k in (0..top).rev() {
        let bx2 = ZPoly::monomial(jf.b(k + 1)?, 2);
        let new_num = trunc(&(&level(k)? * &num) - &(&bx2 * &den));
        den = num;
        num = new_num;
    }
    // series = mu0 * D / N, with N(0) = 1
    let mut out: Vec<RatFuncQ> = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let mut c = jf.mu0() * &den.coeff(i);
        for j in 1..=i.min(num.degree().unwrap_or(0)) {
            c = &c - &(&num.coeff(j) * &out[i - j]);
        }
        out.push(c);
    }
    Ok(out)
}

/// Recovers a finite J-fraction from `mu_0 .. mu_N` by Gram-Schmidt
/// orthogonalization of `1, z, z^2, ...` against the moment functional.
///
/// The result holds `a_0 .. a_{(N-1)/2}` and `b_1 .. b_{N/2}`, exactly the
/// coefficients that `mu_0 .. mu_N` determine.
pub fn jfraction_from_moments(moments: &[RatFuncQ]) -> Result<JFraction> {
    if moments.is_empty() || moments[0].is_zero() {
        return Err(Error::NotQuasiDefinite { depth: 0 });
    }
    let big_n = moments.len() - 1;
    let apply = |p: &ZPoly| -> RatFuncQ { p.coeffs().iter().zip(moments).map(|(c, m)| c * m).sum() };
    // p_k needs moments up to 2k - 1
    let max_poly = (big_n + 1) / 2;
    let mut polys: Vec<ZPoly> = vec![ZPoly::one()];
    let mut norms: Vec<RatFuncQ> = vec![moments[0].clone()];
    for k in 1..=max_poly {
        let zk = ZPoly::monomial(RatFuncQ::one(), k);
        let mut p = zk.clone();
        for (pj, nj) in polys.iter().zip(&norms) {
            let proj = &apply(&(&zk * pj)) / nj;
            p = &p - &pj.scale(&proj);
        }
        if 2 * k <= big_n {
            let norm = apply(&(&p * &p));
            if norm.is_zero() {
                return Err(Error::NotQuasiDefinite { depth: k });
            }
            norms.push(norm);
        }
        polys.push(p);
    }
    let a: Vec<RatFuncQ> = (0..max_poly)
        .map(|k| {
            let lower = if k == 0 { RatFuncQ::zero() } else { polys[k].coeff(k - 1) };
            &polys[k + 1].coeff(k) - &lower
        })
        .collect();
    let b: Vec<RatFuncQ> = (1..norms.len()).map(|k| &norms[k] / &norms[k - 1]).collect();
    Ok(FavardData::from_prefix(moments[0].clone(), a, b))
}

/// `C(2n+2, 3) / 4 = n(n+1)(2n+1)/6`.
fn exponent_shift0(n: i64) -> i64 {
    n * (n + 1) * (2 * n + 1) / 6
}

/// `C(2n+4, 3) / 4 = (n+1)(n+2)(2n+3)/6`.
fn exponent_shift1(n: i64) -> i64 {
    (n + 1) * (n + 2) * (2 * n + 3) / 6
}

fn binom3(m: i64) -> i64 {
    m * (m - 1) * (m - 2) / 6
}

fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// Checks, for `n <= upto`, that `C(2n+2,3)` and `C(2n+4,3)` are divisible by
/// 4 with quotients `sum_{k<=n} k^2` and `sum_{k<=n+1} k^2`, and that the
/// closed exponent formulas agree.
pub fn exponent_identities_hold(upto: i64) -> bool {
    (0..=upto).all(|n| {
        let sq = |m: i64| (1..=m).map(|k| k * k).sum::<i64>();
        let (c0, c1) = (binom3(2 * n + 2), binom3(2 * n + 4));
        c0 % 4 == 0
            && c1 % 4 == 0
            && c0 / 4 == sq(n)
            && c1 / 4 == sq(n + 1)
            && exponent_shift0(n) == sq(n)
            && exponent_shift1(n) == sq(n + 1)
    })
}

fn one_minus_q() -> RatFuncQ {
    RatFuncQ::from_poly(QPoly::from_i64s(&[1, -1]))
}

/// `prod_{k=1}^n num(k) / den(k)` where each factor is a product of
/// step-2 Pochhammer symbols `(sign q^a; q^2)_k`.
fn poch2_product(n: usize, num: &[(i64, i64)], den: &[(i64, i64)]) -> RatFuncQ {
    let mut top = RatFuncQ::one();
    let mut bottom = RatFuncQ::one();
    for k in 1..=n {
        for &(s, a) in num {
            top = &top * &poch_monomial(s, a, 2, k);
        }
        for &(s, a) in den {
            bottom = &bottom * &poch_monomial(s, a, 2, k);
        }
    }
    &top / &bottom
}

/// The closed evaluations of `det(eps_{i+j+shift})` for shifts 0, 1, 2.
pub fn closed_form_euler_det(shift: usize, n: usize) -> Result<RatFuncQ> {
    let ni = n as i64;
    let omq_pow = one_minus_q().pow(ni * (ni + 1))?;
    let opq = |k: usize| RatFuncQ::one_plus_signed_q_pow(1, k);
    Ok(match shift {
        0 => {
            let front = RatFuncQ::signed_q_pow(parity_sign(binom2(ni + 1) as u64), exponent_shift0(ni));
            let prod = poch2_product(n, &[(1, 2), (1, 2)], &[(-1, 1), (-1, 2), (-1, 2), (-1, 3)]);
            &(&front / &omq_pow) * &prod
        }
        1 => {
            let front = RatFuncQ::signed_q_pow(parity_sign(binom2(ni + 2) as u64), exponent_shift1(ni));
            let den = &omq_pow * &opq(2).pow(ni + 1)?;
            let prod = poch2_product(n, &[(1, 2), (1, 4)], &[(-1, 2), (-1, 3), (-1, 3), (-1, 4)]);
            &(&front / &den) * &prod
        }
        2 => {
            let front = RatFuncQ::signed_q_pow(parity_sign(binom2(ni + 2) as u64), exponent_shift1(ni));
            let tail = &RatFuncQ::one() - &RatFuncQ::signed_q_pow(parity_sign(n as u64), (ni + 2) * (ni + 2));
            let top = &(&front * &opq(1).pow(ni)?) * &tail;
            let den = &(&omq_pow * &opq(2).pow(2 * (ni + 1))?) * &opq(3).pow(ni + 1)?;
            let prod = poch2_product(n, &[(1, 4), (1, 4)], &[(-1, 3), (-1, 4), (-1, 4), (-1, 5)]);
            &(&top / &den) * &prod
        }
        s => return Err(Error::OutOfRange(format!("no closed form for shift {s}"))),
    })
}

/// `det(beta_{i+j}) = (-1)^{C(n+1,2)} q^{C(n+1,3)} prod ([k]_q!)^6 / ([2k]_q! [2k+1]_q!)`.
pub fn closed_form_bernoulli_det(n: usize) -> RatFuncQ {
    let ni = n as i64;
    let mut acc = RatFuncQ::signed_q_pow(parity_sign(binom2(ni + 1) as u64), binom3(ni + 1));
    for k in 1..=ni {
        let f = q_factorial(k).unwrap().pow(6).unwrap();
        let d = &q_factorial(2 * k).unwrap() * &q_factorial(2 * k + 1).unwrap();
        acc = &acc * &(&f / &d);
    }
    acc
}

fn theta_xi_product(ell: usize, n: usize) -> RatFuncQ {
    let l = ell as i64;
    poch2_product(
        n,
        &[(1, 2), (1, 2 * l + 2)],
        &[(-1, l + 1), (-1, l + 2), (-1, l + 2), (-1, l + 3)],
    )
}

/// `det(Theta_l(z^{i+j}))`, with `q`-exponent `2 C(n+2,3) + (2l-1) C(n+1,2)`.
pub fn closed_form_theta_det(ell: usize, n: usize) -> RatFuncQ {
    let (l, ni) = (ell as i64, n as i64);
    let e = 2 * binom3(ni + 2) + (2 * l - 1) * binom2(ni + 1);
    let front = RatFuncQ::signed_q_pow(parity_sign(binom2(ni + 1) as u64), e);
    let omq_pow = one_minus_q().pow(ni * (ni + 1)).unwrap();
    &(&front / &omq_pow) * &theta_xi_product(ell, n)
}

/// `det(xi_{l,i+j})`, with `q`-exponent `2 C(n+2,3) + (2l+1) C(n+1,2)`.
pub fn closed_form_xi_det(ell: usize, n: usize) -> RatFuncQ {
    let (l, ni) = (ell as i64, n as i64);
    let e = 2 * binom3(ni + 2) + (2 * l + 1) * binom2(ni + 1);
    &RatFuncQ::signed_q_pow(parity_sign(binom2(ni + 1) as u64), e) * &theta_xi_product(ell, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Exact elimination on the Hankel matrix.
    Bruteforce,
    /// Product formula over the J-fraction coefficients.
    Heilermann,
    /// The displayed closed-form evaluation.
    Closedform,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Bruteforce, Method::Heilermann, Method::Closedform];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Bruteforce => "bruteforce",
            Method::Heilermann => "heilermann",
            Method::Closedform => "closedform",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bruteforce" => Ok(Method::Bruteforce),
            "heilermann" => Ok(Method::Heilermann),
            "closedform" => Ok(Method::Closedform),
            _ => Err(Error::OutOfRange(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HankelResult {
    pub seq: SeqId,
    pub shift: usize,
    pub n: usize,
    pub method: Method,
    pub value: RatFuncQ,
}

/// Whether `method` can evaluate `det(s_{i+j+shift})` for `seq`.
///
/// Bruteforce always applies. Heilermann applies wherever a J-fraction is
/// known in closed form (q-Euler shifts 0 to 2, `xi_l` and `Theta_l` shifts 0
/// and 1); elsewhere it falls back to a J-fraction recovered from the
/// moments themselves. Closed forms exist for q-Euler shifts 0 to 2 and
/// shift 0 of the other sequences.
pub fn method_applies(seq: SeqId, shift: usize, method: Method) -> bool {
    match method {
        Method::Bruteforce | Method::Heilermann => true,
        Method::Closedform => match seq {
            SeqId::Qeuler => shift <= 2,
            _ => shift == 0,
        },
    }
}

/// `det(s_{i+j+shift})_{0 <= i,j <= n}` by the chosen method.
pub fn hankel_det(seq: SeqId, shift: usize, n: usize, method: Method) -> Result<HankelResult> {
    let value = match method {
        Method::Bruteforce => {
            let s = MomentSeq::new(seq, 2 * n + shift);
            det_exact(&hankel_matrix(&s, shift, n)?)?
        }
        Method::Heilermann => heilermann_route(seq, shift, n)?,
        Method::Closedform => match (seq, shift) {
            (SeqId::Qeuler, s) if s <= 2 => closed_form_euler_det(s, n)?,
            (SeqId::Qbernoulli, 0) => closed_form_bernoulli_det(n),
            (SeqId::ThetaEll(l), 0) => closed_form_theta_det(l as usize, n),
            (SeqId::XiEll(l), 0) => closed_form_xi_det(l as usize, n),
            _ => {
                return Err(Error::OutOfRange(format!(
                    "no closed form for {seq} at shift {shift}"
                )))
            }
        },
    };
    Ok(HankelResult {
        seq,
        shift,
        n,
        method,
        value,
    })
}

fn heilermann_route(seq: SeqId, shift: usize, n: usize) -> Result<RatFuncQ> {
    let known = match seq {
        SeqId::Qeuler => Some(jfraction_for_eps(0)?),
        SeqId::XiEll(l) => Some(jfraction_for_xi(l as usize)),
        SeqId::ThetaEll(l) => Some(jfraction_for_theta(l as usize)),
        SeqId::Qbernoulli => None,
    };
    match (seq, shift, known) {
        (SeqId::Qeuler, 1, _) => det_heilermann(&jfraction_for_eps(1)?, n),
        (SeqId::Qeuler, 2, _) => det_shifted_via_favard(&jfraction_for_eps(1)?, n),
        (_, 0, Some(jf)) => det_heilermann(&jf, n),
        (_, 1, Some(jf)) => det_shifted_via_favard(&jf, n),
        _ => {
            let s = MomentSeq::new(seq, 2 * n + shift);
            let jf = jfraction_from_moments(&s.values()[shift..])?;
            det_heilermann(&jf, n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carlitz::q_euler_sequence;
    use crate::functionals::{theta_moments, xi_moment};
    use crate::orthopoly::{coeffs_monic, coeffs_p};
    use num_rational::BigRational;
    use num_traits::One;

    fn rf(n: &[i64], d: &[i64]) -> RatFuncQ {
        RatFuncQ::new(QPoly::from_i64s(n), QPoly::from_i64s(d)).unwrap()
    }

    fn shift0_n1() -> RatFuncQ {
        let den = &(&QPoly::from_i64s(&[1, 0, 1]) * &QPoly::from_i64s(&[1, 0, 1])) * &QPoly::from_i64s(&[1, 0, 0, 1]);
        RatFuncQ::new(QPoly::from_i64s(&[0, -1, -1]), den).unwrap()
    }

    #[test]
    fn matrix_layout() {
        let s = MomentSeq::new(SeqId::Qeuler, 8);
        assert_eq!(hankel_matrix(&s, 0, 0).unwrap(), vec![vec![RatFuncQ::one()]]);
        let m = hankel_matrix(&s, 0, 1).unwrap();
        assert_eq!(m[0][1], s.values()[1]);
        assert_eq!(m[1][1], s.values()[2]);
        let m = hankel_matrix(&s, 2, 3).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m[i][j], s.values()[i + j + 2]);
            }
        }
        assert!(matches!(hankel_matrix(&s, 1, 4), Err(Error::InsufficientLength { .. })));
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(det_exact(&vec![vec![RatFuncQ::one()]]).unwrap(), RatFuncQ::one());
        let id: Matrix = (0..4)
            .map(|i| (0..4).map(|j| if i == j { RatFuncQ::one() } else { RatFuncQ::zero() }).collect())
            .collect();
        assert_eq!(det_exact(&id).unwrap(), RatFuncQ::one());
        // needs a row swap
        let p: Matrix = vec![
            vec![RatFuncQ::zero(), RatFuncQ::one(), RatFuncQ::zero(), RatFuncQ::zero()],
            vec![RatFuncQ::one(), RatFuncQ::zero(), RatFuncQ::zero(), RatFuncQ::zero()],
            vec![RatFuncQ::zero(), RatFuncQ::zero(), RatFuncQ::q(), RatFuncQ::zero()],
            vec![RatFuncQ::zero(), RatFuncQ::zero(), RatFuncQ::zero(), RatFuncQ::one()],
        ];
        assert_eq!(det_exact(&p).unwrap(), -RatFuncQ::q());
        let mut sing = id.clone();
        sing[3] = sing[2].clone();
        assert!(det_exact(&sing).unwrap().is_zero());
        let s = MomentSeq::new(SeqId::Qeuler, 2);
        assert_eq!(det_exact(&hankel_matrix(&s, 0, 1).unwrap()).unwrap(), shift0_n1());
    }

    #[test]
    fn cofactor_and_bareiss_agree() {
        for (id, shift) in [(SeqId::Qeuler, 0), (SeqId::Qeuler, 1), (SeqId::Qbernoulli, 0), (SeqId::XiEll(1), 0)] {
            let s = MomentSeq::new(id, 6);
            for n in 0..=2 {
                let m = hankel_matrix(&s, shift, n).unwrap();
                assert_eq!(det_cofactor(&m).unwrap(), det_bareiss(&m).unwrap(), "{id} shift {shift} n {n}");
            }
        }
    }

    #[test]
    fn heilermann_examples() {
        let jf = jfraction_for_eps(0).unwrap();
        assert_eq!(det_heilermann(&jf, 0).unwrap(), RatFuncQ::one());
        assert_eq!(det_heilermann(&jf, 1).unwrap(), shift0_n1());
        let s = MomentSeq::new(SeqId::Qeuler, 4);
        assert_eq!(det_heilermann(&jf, 2).unwrap(), det_exact(&hankel_matrix(&s, 0, 2).unwrap()).unwrap());
        assert_eq!(det_shifted_via_favard(&jf, 0).unwrap(), s.values()[1]);
        let bad = FavardData::from_formulas(RatFuncQ::one(), |_| RatFuncQ::zero(), |_| RatFuncQ::zero());
        assert_eq!(det_heilermann(&bad, 1), Err(Error::Degenerate { n: 1 }));
    }

    #[test]
    fn shifted_routes_small() {
        let s = MomentSeq::new(SeqId::Qeuler, 12);
        let jf0 = jfraction_for_eps(0).unwrap();
        for n in 0..=3 {
            let brute1 = det_exact(&hankel_matrix(&s, 1, n).unwrap()).unwrap();
            assert_eq!(det_shifted_via_favard(&jf0, n).unwrap(), brute1, "n={n}");
            let brute2 = det_exact(&hankel_matrix(&s, 2, n).unwrap()).unwrap();
            assert_eq!(det_shifted_via_favard(&jfraction_for_eps(1).unwrap(), n).unwrap(), brute2);
            assert_eq!(det_shift2_via_p1_closed(n).unwrap(), brute2);
        }
    }

    #[test]
    fn jfraction_examples() {
        let jf0 = jfraction_for_eps(0).unwrap();
        assert_eq!(jf0.mu0(), &RatFuncQ::one());
        assert_eq!(jf0.a(0).unwrap(), rf(&[0, 1], &[1, 0, 1]));
        let jf1 = jfraction_for_eps(1).unwrap();
        assert_eq!(jf1.mu0(), &rf(&[0, -1], &[1, 0, 1]));
        assert!(jfraction_for_eps(2).is_err());
        let e = jfraction_expand(&jf0, 1).unwrap();
        assert_eq!(e[1], -&(&jf0.a(0).unwrap() * jf0.mu0()));
        assert_eq!(jfraction_expand(&jf0, 0).unwrap(), vec![RatFuncQ::one()]);
        let eps = q_euler_sequence(13);
        assert_eq!(jfraction_expand(&jf0, 12).unwrap(), eps[..=12].to_vec());
        assert_eq!(jfraction_expand(&jf1, 10).unwrap(), eps[1..=11].to_vec());
    }

    #[test]
    fn jfraction_round_trips() {
        let eps = q_euler_sequence(12);
        let jf = jfraction_from_moments(&eps).unwrap();
        for n in 0..=5 {
            assert_eq!(jf.a(n).unwrap(), coeffs_p(0, n).0, "a_{n}");
            assert_eq!(jf.b(n + 1).unwrap(), coeffs_p(0, n + 1).1, "b_{}", n + 1);
        }
        assert_eq!(jfraction_expand(&jf, 12).unwrap(), eps);

        let xi: Vec<RatFuncQ> = (0..=10).map(|n| xi_moment(0, n)).collect();
        let jf = jfraction_from_moments(&xi).unwrap();
        for n in 0..=4 {
            assert_eq!(jf.a(n).unwrap(), coeffs_monic(0, n).0);
            assert_eq!(jf.b(n + 1).unwrap(), coeffs_monic(0, n + 1).1);
        }

        // 1, 0, 1, 0: a_0 = a_1 = 0, b_1 = 1; continuing with 1 makes the
        // 3x3 Hankel determinant vanish
        let ints = |v: &[i64]| v.iter().map(|&k| RatFuncQ::from_int(k)).collect::<Vec<_>>();
        let jf = jfraction_from_moments(&ints(&[1, 0, 1, 0])).unwrap();
        assert!(jf.a(0).unwrap().is_zero() && jf.a(1).unwrap().is_zero());
        assert!(jf.b(1).unwrap().is_one());
        assert_eq!(
            jfraction_from_moments(&ints(&[1, 0, 1, 0, 1])).err(),
            Some(Error::NotQuasiDefinite { depth: 2 })
        );
        // Chebyshev moments (Catalan numbers between zeros): a = 0, b = 1
        let jf = jfraction_from_moments(&ints(&[1, 0, 1, 0, 2, 0, 5, 0, 14])).unwrap();
        for n in 0..4 {
            assert!(jf.a(n).unwrap().is_zero());
            assert!(jf.b(n + 1).unwrap().is_one());
        }
    }

    #[test]
    fn quasi_definiteness_failure_names_depth() {
        // mu = 1, 1, 1, ... has det(mu_{i+j})_{1x1... 2x2} = 0
        let ones = vec![RatFuncQ::one(); 6];
        assert_eq!(jfraction_from_moments(&ones).err(), Some(Error::NotQuasiDefinite { depth: 1 }));
        assert_eq!(jfraction_from_moments(&[RatFuncQ::zero()]).err(), Some(Error::NotQuasiDefinite { depth: 0 }));
    }

    #[test]
    fn closed_form_small_cases() {
        assert_eq!(closed_form_euler_det(0, 1).unwrap(), shift0_n1());
        let eps = q_euler_sequence(2);
        assert_eq!(closed_form_euler_det(0, 0).unwrap(), eps[0]);
        assert_eq!(closed_form_euler_det(1, 0).unwrap(), eps[1]);
        assert_eq!(closed_form_euler_det(2, 0).unwrap(), eps[2]);
        assert!(closed_form_euler_det(3, 0).is_err());
        let quarter = BigRational::new((-1).into(), 4.into());
        assert_eq!(closed_form_euler_det(0, 1).unwrap().eval_at(&BigRational::one()).unwrap(), quarter);
        assert_eq!(closed_form_bernoulli_det(0), RatFuncQ::one());
        let d = &(&QPoly::from_i64s(&[1, 1]) * &QPoly::from_i64s(&[1, 1])) * &QPoly::from_i64s(&[1, 1, 1]);
        assert_eq!(closed_form_bernoulli_det(1), RatFuncQ::new(QPoly::from_i64s(&[-1]), d).unwrap());
    }

    #[test]
    fn theta_det_reductions() {
        for n in 0..=3 {
            assert_eq!(closed_form_theta_det(0, n), closed_form_euler_det(0, n).unwrap());
            let eps1 = q_euler_sequence(1)[1].clone();
            let scaled = &eps1.pow(n as i64 + 1).unwrap() * &closed_form_theta_det(1, n);
            assert_eq!(closed_form_euler_det(1, n).unwrap(), scaled);
        }
        let t2 = MomentSeq::from_values(SeqId::ThetaEll(2), theta_moments(2, 6));
        for n in 0..=3 {
            assert_eq!(det_exact(&hankel_matrix(&t2, 0, n).unwrap()).unwrap(), closed_form_theta_det(2, n));
        }
    }

    #[test]
    fn exponents_are_integral() {
        assert!(exponent_identities_hold(50));
    }

    #[test]
    fn result_json_shape() {
        let r = hankel_det(SeqId::Qeuler, 0, 3, Method::Closedform).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["seq"], "qeuler");
        assert_eq!(v["method"], "closedform");
        assert_eq!(v["n"], 3);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"seq":"qeuler","shift":0,"n":3,"method":"closedform","value":{"num":["#));
        let back: HankelResult = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn all_methods_agree_small() {
        for (seq, shift) in [
            (SeqId::Qeuler, 0),
            (SeqId::Qeuler, 1),
            (SeqId::Qeuler, 2),
            (SeqId::Qbernoulli, 0),
            (SeqId::XiEll(2), 0),
            (SeqId::ThetaEll(3), 0),
            (SeqId::ThetaEll(1), 1),
            (SeqId::Qeuler, 3),
        ] {
            for n in 0..=3 {
                let brute = hankel_det(seq, shift, n, Method::Bruteforce).unwrap().value;
                for m in [Method::Heilermann, Method::Closedform] {
                    if method_applies(seq, shift, m) {
                        assert_eq!(hankel_det(seq, shift, n, m).unwrap().value, brute, "{seq} {shift} {n} {m}");
                    }
                }
            }
        }
    }
}
