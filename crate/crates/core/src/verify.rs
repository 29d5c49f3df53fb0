//! Named identity checks, each comparing two independent computations of the
//! same quantity with exact equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::carlitz::{
    euler_q1_reference, limit_q1, q_bernoulli_explicit, q_bernoulli_sequence, q_euler_explicit, q_euler_sequence,
    SeqId,
};
use crate::error::Result;
use crate::functionals::{
    phi, phi_closed_m_n, phi_closed_n1_n, qbinom_basis, theta_moments, verify_orthogonality, verify_phi_relation,
    verify_xi_on_poch, FunctionalId,
};
use crate::hankel::{
    closed_form_euler_det, det_shift2_via_p1_closed, exponent_identities_hold, hankel_det, jfraction_expand,
    jfraction_for_eps, jfraction_from_moments, method_applies, Method,
};
use crate::orthopoly::{
    build_j_via_phi, build_j_via_recurrence, build_p_via_phi2, coeffs_p, family_polys, p_from_jtilde, FamilyId,
    FamilyKind, ZPoly,
};
use crate::ratcore::RatFuncQ;

/// One compared pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCase {
    pub case: String,
    pub lhs_method: String,
    pub rhs_method: String,
    pub equal: bool,
}

fn case(name: impl Into<String>, lhs: &str, rhs: &str, equal: bool) -> VerifyCase {
    VerifyCase {
        case: name.into(),
        lhs_method: lhs.to_string(),
        rhs_method: rhs.to_string(),
        equal,
    }
}

type Suite = fn(usize) -> Result<Vec<VerifyCase>>;

/// Every suite by name. `max_n` bounds the size parameter of each suite.
pub const SUITES: &[(&str, Suite)] = &[
    ("bernoulli-hankel", bernoulli_hankel),
    ("carlitz-consistency", carlitz_consistency),
    ("euler-hankel-shift0", |n| euler_hankel(0, n)),
    ("euler-hankel-shift1", |n| euler_hankel(1, n)),
    ("euler-hankel-shift2", euler_hankel_shift2),
    ("euler-jfraction", euler_jfraction),
    ("euler-q1-limit", euler_q1_limit),
    ("exponent-integrality", exponent_integrality),
    ("jfraction-round-trip", jfraction_round_trip),
    ("phi-basis-closed-forms", phi_basis_closed_forms),
    ("phi-orthogonality", |n| orthogonality(FunctionalId::PhiEll(0), 0..=0, n)),
    ("phi-relation", phi_relation),
    ("phi1-orthogonality", |n| orthogonality(FunctionalId::PhiEll(1), 1..=1, n)),
    ("polynomial-routes", polynomial_routes),
    ("theta-hankel", theta_hankel),
    ("theta-intertwining", theta_intertwining),
    ("theta-orthogonality", |n| orthogonality(FunctionalId::ThetaEll(0), 0..=3, n)),
    ("xi-hankel", xi_hankel),
    ("xi-moments", xi_moments),
    ("xi-orthogonality", |n| orthogonality(FunctionalId::XiEll(0), 0..=3, n)),
];

/// Runs every suite whose name contains `only` (all of them when `None`),
/// in parallel. Cases come back sorted by name.
pub fn run_suites(max_n: usize, only: Option<&str>) -> Result<Vec<VerifyCase>> {
    let chosen: Vec<&(&str, Suite)> = SUITES
        .iter()
        .filter(|(name, _)| only.is_none_or(|o| name.contains(o)))
        .collect();
    let mut cases: Vec<VerifyCase> = chosen
        .par_iter()
        .map(|(_, suite)| suite(max_n))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    cases.sort_by(|a, b| a.case.cmp(&b.case));
    Ok(cases)
}

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

fn det_methods(prefix: &str, seq: SeqId, shift: usize, max_n: usize) -> Result<Vec<VerifyCase>> {
    (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let brute = hankel_det(seq, shift, n, Method::Bruteforce)?.value;
            let mut out = Vec::new();
            for m in [Method::Heilermann, Method::Closedform] {
                if method_applies(seq, shift, m) {
                    let v = hankel_det(seq, shift, n, m)?.value;
                    out.push(case(format!("{prefix}/n={n:02}"), "bruteforce", &m.to_string(), v == brute));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

fn euler_hankel(shift: usize, max_n: usize) -> Result<Vec<VerifyCase>> {
    det_methods(&format!("euler-hankel-shift{shift}"), SeqId::Qeuler, shift, max_n)
}

fn euler_hankel_shift2(max_n: usize) -> Result<Vec<VerifyCase>> {
    let mut out = det_methods("euler-hankel-shift2", SeqId::Qeuler, 2, max_n)?;
    for n in 0..=max_n {
        let closed = closed_form_euler_det(2, n)?;
        let via = det_shift2_via_p1_closed(n)?;
        out.push(case(format!("euler-hankel-shift2/n={n:02}"), "p1-at-zero-closed", "closedform", via == closed));
    }
    Ok(out)
}

fn bernoulli_hankel(max_n: usize) -> Result<Vec<VerifyCase>> {
    det_methods("bernoulli-hankel", SeqId::Qbernoulli, 0, max_n)
}

fn xi_hankel(max_n: usize) -> Result<Vec<VerifyCase>> {
    let mut out = Vec::new();
    for ell in 0..=3 {
        out.extend(det_methods(&format!("xi-hankel/l={ell}"), SeqId::XiEll(ell), 0, max_n)?);
    }
    Ok(out)
}

fn theta_hankel(max_n: usize) -> Result<Vec<VerifyCase>> {
    let mut out = Vec::new();
    for ell in 0..=3 {
        out.extend(det_methods(&format!("theta-hankel/l={ell}"), SeqId::ThetaEll(ell), 0, max_n.min(4))?);
    }
    Ok(out)
}

fn carlitz_consistency(max_n: usize) -> Result<Vec<VerifyCase>> {
    let upto = (2 * max_n + 2).max(4);
    let eps = q_euler_sequence(upto);
    let beta = q_bernoulli_sequence(upto);
    Ok((0..=upto)
        .into_par_iter()
        .flat_map_iter(|n| {
            [
                case(format!("carlitz-consistency/eps/n={n:02}"), "explicit", "recursive", q_euler_explicit(n) == eps[n]),
                case(format!("carlitz-consistency/beta/n={n:02}"), "explicit", "recursive", q_bernoulli_explicit(n) == beta[n]),
            ]
        })
        .collect())
}

fn euler_q1_limit(max_n: usize) -> Result<Vec<VerifyCase>> {
    let reference = euler_q1_reference();
    let mut out = Vec::new();
    for (n, r) in reference.iter().enumerate().take(2 * max_n + 2) {
        let v = limit_q1(SeqId::Qeuler, n)?;
        out.push(case(format!("euler-q1-limit/eps/n={n:02}"), "eval-at-1", "reference", &v == r));
    }
    // (-1/4)^{C(n+1,2)} prod (k!)^2
    for n in 0..=max_n {
        let v = closed_form_euler_det(0, n)?.eval_at(&BigRational::one())?;
        let mut expected = BigRational::new(BigInt::from(-1), BigInt::from(4)).pow((n * (n + 1) / 2) as i32);
        let mut fact = BigInt::one();
        for k in 1..=n {
            fact *= k;
            expected *= BigRational::from_integer(&fact * &fact);
        }
        out.push(case(format!("euler-q1-limit/det/n={n:02}"), "closedform-at-1", "classical", v == expected));
    }
    Ok(out)
}

fn euler_jfraction(max_n: usize) -> Result<Vec<VerifyCase>> {
    let order = 2 * max_n + 2;
    let eps = q_euler_sequence(order + 1);
    let mut out = Vec::new();
    for ell in 0..=1usize {
        let series = jfraction_expand(&jfraction_for_eps(ell)?, order)?;
        for (k, v) in series.iter().enumerate() {
            out.push(case(format!("euler-jfraction/l={ell}/k={k:02}"), "jfraction", "carlitz", v == &eps[k + ell]));
        }
    }
    Ok(out)
}

fn jfraction_round_trip(max_n: usize) -> Result<Vec<VerifyCase>> {
    let eps = q_euler_sequence(2 * max_n + 2);
    let jf = jfraction_from_moments(&eps)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        let (a, b) = coeffs_p(0, n);
        out.push(case(format!("jfraction-round-trip/a/n={n:02}"), "gram-schmidt", "closedform", jf.a(n)? == a));
        if n >= 1 {
            out.push(case(format!("jfraction-round-trip/b/n={n:02}"), "gram-schmidt", "closedform", jf.b(n)? == b));
        }
    }
    Ok(out)
}

fn exponent_integrality(max_n: usize) -> Result<Vec<VerifyCase>> {
    let upto = (10 * max_n).max(50) as i64;
    Ok(vec![case("exponent-integrality", "binomial/4", "sum-of-squares", exponent_identities_hold(upto))])
}

fn orthogonality(kind: FunctionalId, ells: std::ops::RangeInclusive<u32>, max_n: usize) -> Result<Vec<VerifyCase>> {
    let mut out = Vec::new();
    let upto = (max_n + 3).max(1);
    for ell in ells {
        let f = match kind {
            FunctionalId::Phi | FunctionalId::PhiEll(_) => kind,
            FunctionalId::ThetaEll(_) => FunctionalId::ThetaEll(ell),
            FunctionalId::XiEll(_) => FunctionalId::XiEll(ell),
        };
        let report = verify_orthogonality(f, f.partner()?, upto)?;
        let prefix = match kind {
            FunctionalId::Phi | FunctionalId::PhiEll(0) => "phi-orthogonality".to_string(),
            FunctionalId::PhiEll(_) => "phi1-orthogonality".to_string(),
            FunctionalId::ThetaEll(_) => format!("theta-orthogonality/l={ell}"),
            FunctionalId::XiEll(_) => format!("xi-orthogonality/l={ell}"),
        };
        for n in 0..=upto {
            for m in 0..=n {
                if m == n && n > 0 {
                    continue;
                }
                let failed = report.failures.iter().any(|x| x.m == m && x.n == n);
                let rhs = if m == n { "nonzero" } else { "zero" };
                out.push(case(format!("{prefix}/m={m:02},n={n:02}"), "functional", rhs, !failed));
            }
        }
    }
    Ok(out)
}

/// Deterministic integer polynomials of degree up to `deg`.
fn sample_polys(deg: usize) -> Vec<ZPoly> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 41) as i64 - 20
    };
    (0..=deg)
        .flat_map(|d| {
            let mono = ZPoly::monomial(RatFuncQ::one(), d);
            let rand = ZPoly::new((0..=d).map(|_| RatFuncQ::from_int(next())).collect());
            [mono, rand]
        })
        .collect()
}

fn phi_relation(max_n: usize) -> Result<Vec<VerifyCase>> {
    Ok(sample_polys(max_n + 3)
        .into_par_iter()
        .enumerate()
        .map(|(i, p)| case(format!("phi-relation/p={i:02}"), "q*phi(p(1+qz))+phi(p)", "(1+q)p(0)", verify_phi_relation(&p)))
        .collect())
}

fn phi_basis_closed_forms(max_n: usize) -> Result<Vec<VerifyCase>> {
    let top = max_n + 1;
    let mut out = Vec::new();
    for n in 0..=top {
        for m in 0..=n {
            let direct = phi(&qbinom_basis(m as i64, n));
            out.push(case(format!("phi-basis-closed-forms/m={m:02},n={n:02}"), "basis-route", "closedform", phi_closed_m_n(m, n)? == direct));
        }
        let direct = phi(&qbinom_basis(n as i64 + 1, n));
        out.push(case(format!("phi-basis-closed-forms/next/n={n:02}"), "basis-route", "closedform", phi_closed_n1_n(n) == direct));
    }
    Ok(out)
}

fn theta_intertwining(max_n: usize) -> Result<Vec<VerifyCase>> {
    let upto = 2 * max_n + 2;
    let eps = q_euler_sequence(upto + 1);
    let t0 = theta_moments(0, upto);
    let t1 = theta_moments(1, upto);
    let mut out = Vec::new();
    for n in 0..=upto {
        out.push(case(format!("theta-intertwining/l=0/n={n:02}"), "theta-moment", "eps0-scaled", t0[n] == eps[n]));
        out.push(case(format!("theta-intertwining/l=1/n={n:02}"), "theta-moment", "eps1-scaled", t1[n] == &eps[n + 1] / &eps[1]));
    }
    Ok(out)
}

fn xi_moments(max_n: usize) -> Result<Vec<VerifyCase>> {
    let mut out = Vec::new();
    for ell in 0..=3 {
        for n in 0..=max_n + 3 {
            out.push(case(format!("xi-moments/l={ell}/n={n:02}"), "q-binomial-expansion", "closedform", verify_xi_on_poch(ell, n)));
        }
    }
    Ok(out)
}

fn polynomial_routes(max_n: usize) -> Result<Vec<VerifyCase>> {
    let upto = max_n + 3;
    let mut out = Vec::new();
    for ell in 0..=3u32 {
        let l = ell as usize;
        let rec = family_polys(FamilyId::new(FamilyKind::PFamily, ell), upto)?;
        let aff = p_from_jtilde(&family_polys(FamilyId::new(FamilyKind::MonicJtilde, ell), upto)?)?;
        let jrec = build_j_via_recurrence(l, upto);
        for n in 0..=upto {
            let name = format!("polynomial-routes/l={ell}/n={n:02}");
            out.push(case(&name, "P-3phi2", "P-recurrence", build_p_via_phi2(l, n) == rec[n]));
            out.push(case(&name, "Jtilde-affine", "P-recurrence", aff[n] == rec[n]));
            out.push(case(&name, "J-3phi2", "J-AB-recurrence", build_j_via_phi(l, n) == jrec[n]));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_are_unique_and_sorted() {
        let names = suite_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
    }

    #[test]
    fn small_run_passes() {
        let cases = run_suites(1, None).unwrap();
        assert!(!cases.is_empty());
        let failed: Vec<_> = cases.iter().filter(|c| !c.equal).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(cases.windows(2).all(|w| w[0].case <= w[1].case));
    }

    #[test]
    fn only_filters_by_substring() {
        let cases = run_suites(0, Some("xi-moments")).unwrap();
        assert!(cases.iter().all(|c| c.case.starts_with("xi-moments")));
        assert!(run_suites(0, Some("no-such-suite")).unwrap().is_empty());
    }

    #[test]
    fn zero_size_runs() {
        assert!(run_suites(0, None).unwrap().iter().all(|c| c.equal));
    }
}
