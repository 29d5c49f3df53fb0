use std::fmt;
use std::sync::Arc;

use super::zpoly::ZPoly;
use crate::error::{Error, Result};
use crate::ratcore::RatFuncQ;

type CoeffFn = Arc<dyn Fn(usize) -> RatFuncQ + Send + Sync>;

/// A coefficient sequence, either given by a formula or by a finite prefix.
#[derive(Clone)]
pub enum Coeffs {
    Formula(CoeffFn),
    /// `values[i]` is the coefficient at index `first + i`.
    Prefix { first: usize, values: Vec<RatFuncQ> },
}

impl Coeffs {
    pub fn formula(f: impl Fn(usize) -> RatFuncQ + Send + Sync + 'static) -> Self {
        Coeffs::Formula(Arc::new(f))
    }

    fn at(&self, n: usize) -> Result<RatFuncQ> {
        match self {
            Coeffs::Formula(f) => Ok(f(n)),
            Coeffs::Prefix { first, values } => n
                .checked_sub(*first)
                .and_then(|i| values.get(i))
                .cloned()
                .ok_or(Error::PrefixExhausted {
                    index: n,
                    len: values.len(),
                }),
        }
    }

    /// Number of available coefficients, `None` when unbounded.
    fn available(&self) -> Option<usize> {
        match self {
            Coeffs::Formula(_) => None,
            Coeffs::Prefix { values, .. } => Some(values.len()),
        }
    }
}

impl fmt::Debug for Coeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeffs::Formula(_) => f.write_str("Formula(..)"),
            Coeffs::Prefix { first, values } => f
                .debug_struct("Prefix")
                .field("first", first)
                .field("len", &values.len())
                .finish(),
        }
    }
}

/// Recurrence data `p_{n+1} = (a_n + z) p_n - b_n p_{n-1}` together with the
/// leading moment `mu0` of the associated functional.
///
/// `b_n` must be nonzero for every accessed `n >= 1`.
#[derive(Clone, Debug)]
pub struct FavardData {
    mu0: RatFuncQ,
    a: Coeffs,
    b: Coeffs,
}

impl FavardData {
    pub fn from_formulas(
        mu0: RatFuncQ,
        a: impl Fn(usize) -> RatFuncQ + Send + Sync + 'static,
        b: impl Fn(usize) -> RatFuncQ + Send + Sync + 'static,
    ) -> Self {
        FavardData {
            mu0,
            a: Coeffs::formula(a),
            b: Coeffs::formula(b),
        }
    }

    /// `a = [a_0, a_1, ...]`, `b = [b_1, b_2, ...]`.
    pub fn from_prefix(mu0: RatFuncQ, a: Vec<RatFuncQ>, b: Vec<RatFuncQ>) -> Self {
        FavardData {
            mu0,
            a: Coeffs::Prefix { first: 0, values: a },
            b: Coeffs::Prefix { first: 1, values: b },
        }
    }

    pub fn mu0(&self) -> &RatFuncQ {
        &self.mu0
    }

    pub fn with_mu0(mut self, mu0: RatFuncQ) -> Self {
        self.mu0 = mu0;
        self
    }

    pub fn a(&self, n: usize) -> Result<RatFuncQ> {
        self.a.at(n)
    }

    /// `b_n` for `n >= 1`; a zero value is a [`Error::Degenerate`] error.
    pub fn b(&self, n: usize) -> Result<RatFuncQ> {
        if n == 0 {
            return Err(Error::OutOfRange("b_n is defined for n >= 1".into()));
        }
        let v = self.b.at(n)?;
        if v.is_zero() {
            return Err(Error::Degenerate { n });
        }
        Ok(v)
    }

    /// Largest `n` for which both `a_{n-1}` and `b_{n-1}` exist, i.e. how
    /// many polynomials beyond `p_0` can be built. `None` when unbounded.
    pub fn depth(&self) -> Option<usize> {
        match (self.a.available(), self.b.available()) {
            (None, None) => None,
            (Some(na), None) => Some(na),
            (None, Some(nb)) => Some(nb + 1),
            (Some(na), Some(nb)) => Some(na.min(nb + 1)),
        }
    }
}

/// `[p_0, ..., p_upto]` from the three-term recurrence, `p_0 = 1`,
/// `p_1 = a_0 + z`.
pub fn three_term_build(data: &FavardData, upto: usize) -> Result<Vec<ZPoly>> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(ZPoly::one());
    if upto == 0 {
        return Ok(out);
    }
    out.push(ZPoly::linear(data.a(0)?, RatFuncQ::one()));
    for n in 1..upto {
        let a = data.a(n)?;
        let b = data.b(n)?;
        let shifted = &out[n] * &ZPoly::linear(a, RatFuncQ::one());
        let next = &shifted - &out[n - 1].scale(&b);
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_like() {
        let data = FavardData::from_formulas(RatFuncQ::one(), |_| RatFuncQ::zero(), |_| RatFuncQ::one());
        let ps = three_term_build(&data, 4).unwrap();
        let z = ZPoly::z();
        assert_eq!(ps[2], &(&z * &z) - &ZPoly::one());
        for (n, p) in ps.iter().enumerate() {
            assert_eq!(p.degree(), Some(n));
            assert!(p.is_monic());
        }
    }

    #[test]
    fn zero_b_is_degenerate() {
        let data = FavardData::from_formulas(
            RatFuncQ::one(),
            |_| RatFuncQ::zero(),
            |n| if n == 3 { RatFuncQ::zero() } else { RatFuncQ::one() },
        );
        assert_eq!(three_term_build(&data, 3).unwrap().len(), 4);
        assert_eq!(three_term_build(&data, 4), Err(Error::Degenerate { n: 3 }));
    }

    #[test]
    fn prefix_exhaustion() {
        let data = FavardData::from_prefix(
            RatFuncQ::one(),
            vec![RatFuncQ::zero(), RatFuncQ::zero()],
            vec![RatFuncQ::one()],
        );
        assert_eq!(data.depth(), Some(2));
        assert!(three_term_build(&data, 2).is_ok());
        assert!(matches!(three_term_build(&data, 3), Err(Error::PrefixExhausted { .. })));
    }
}
