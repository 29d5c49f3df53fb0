use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::poly_gcd;
use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// An element of `Q(q)` in canonical form.
///
/// `num / den` with `den != 0`, no common factor of positive degree, no
/// common integer factor, and `den` having a positive leading coefficient.
/// Under these rules two values are equal iff their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFuncQ {
    num: QPoly,
    den: QPoly,
}

/// Field operation selector for [`ratfunc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn ratfunc_arith(lhs: &RatFuncQ, rhs: &RatFuncQ, op: ArithOp) -> Result<RatFuncQ> {
    Ok(match op {
        ArithOp::Add => lhs + rhs,
        ArithOp::Sub => lhs - rhs,
        ArithOp::Mul => lhs * rhs,
        ArithOp::Div => lhs.checked_div(rhs)?,
    })
}

impl RatFuncQ {
    /// Builds and canonicalizes `num / den`.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    /// Wraps a pair that is already known to be coprime; only the sign is
    /// normalized.
    fn from_coprime(mut num: QPoly, mut den: QPoly) -> Self {
        if den.lc().is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            den = QPoly::one();
        }
        RatFuncQ { num, den }
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        let c = num.content().gcd(&den.content());
        let divisor = if c.is_one() { g } else { g.scale(&c) };
        if divisor.is_one() {
            return Self::from_coprime(num, den);
        }
        let n = num.div_exact(&divisor).expect("gcd divides numerator");
        let d = den.div_exact(&divisor).expect("gcd divides denominator");
        Self::from_coprime(n, d)
    }

    pub fn zero() -> Self {
        RatFuncQ {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        RatFuncQ {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_coprime(
            QPoly::constant(r.numer().clone()),
            QPoly::constant(r.denom().clone()),
        )
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFuncQ {
            num: p,
            den: QPoly::one(),
        }
    }

    /// The formal variable `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`; negative powers become `1 / q^(-k)`.
    pub fn q_pow(k: i64) -> Self {
        Self::signed_q_pow(1, k)
    }

    /// `c * q^k`.
    pub fn signed_q_pow(c: i64, k: i64) -> Self {
        let mono = QPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        let c = QPoly::constant(BigInt::from(c));
        if k >= 0 {
            Self::from_poly(&c * &mono)
        } else {
            Self::from_coprime(c, mono)
        }
    }

    /// `1 + sign * q^k` for `k >= 0`.
    pub fn one_plus_signed_q_pow(sign: i64, k: usize) -> Self {
        Self::from_poly(QPoly::one_plus_signed_power(sign, k))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `q`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as an exact rational when it does not depend on `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant()
            .then(|| BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    pub fn checked_div(&self, rhs: &RatFuncQ) -> Result<RatFuncQ> {
        Ok(self * &rhs.inv()?)
    }

    pub fn inv(&self) -> Result<RatFuncQ> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<RatFuncQ> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(e.unsigned_abs()).map_err(|_| Error::OutOfRange("exponent".into()))?;
        Ok(Self::from_coprime(base.num.pow(e), base.den.pow(e)))
    }

    /// Exact value at a rational point. The representation is already
    /// reduced, so a vanishing denominator is a genuine pole.
    pub fn eval_at(&self, point: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_rational(point);
        if d.is_zero() {
            return Err(Error::Pole {
                point: point.to_string(),
            });
        }
        Ok(self.num.eval_rational(point) / d)
    }

    /// Multiplies by an integer scalar.
    pub fn scale_int(&self, c: &BigInt) -> RatFuncQ {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let g = c.gcd(&self.den.content());
        let num = self.num.scale(&(c / &g));
        let den = self.den.div_scalar_exact(&g);
        Self::from_coprime(num, den)
    }
}

pub fn eval_at(f: &RatFuncQ, point: &BigRational) -> Result<BigRational> {
    f.eval_at(point)
}

impl Default for RatFuncQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFuncQ({self})")
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &QPoly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl Add for &RatFuncQ {
    type Output = RatFuncQ;
    fn add(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFuncQ::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFuncQ::from_coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFuncQ::from_coprime(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let g = full_gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFuncQ::from_coprime(num, &self.den * &rhs.den);
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return RatFuncQ::zero();
        }
        let g2 = full_gcd(&t, &g);
        let num = t.div_exact(&g2).unwrap();
        let den = &b1 * &rhs.den.div_exact(&g2).unwrap();
        RatFuncQ::from_coprime(num, den)
    }
}

/// gcd in `Z[q]` including content, with positive leading coefficient.
fn full_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let c = a.content().gcd(&b.content());
    let g = poly_gcd(a, b);
    if c.is_one() {
        g
    } else {
        g.scale(&c)
    }
}

impl Neg for &RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        RatFuncQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        RatFuncQ {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for &RatFuncQ {
    type Output = RatFuncQ;
    fn sub(self, rhs: &RatFuncQ) -> RatFuncQ {
        self + &(-rhs)
    }
}

impl Mul for &RatFuncQ {
    type Output = RatFuncQ;
    fn mul(self, rhs: &RatFuncQ) -> RatFuncQ {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncQ::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let g1 = full_gcd(&self.num, &rhs.den);
        let g2 = full_gcd(&rhs.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), rhs.den.div_exact(&g1).unwrap())
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        RatFuncQ::from_coprime(&a * &c, &b * &d)
    }
}

impl Div for &RatFuncQ {
    type Output = RatFuncQ;
    /// Panics on division by zero; use [`RatFuncQ::checked_div`] to recover.
    fn div(self, rhs: &RatFuncQ) -> RatFuncQ {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFuncQ {
            type Output = RatFuncQ;
            fn $m(self, rhs: RatFuncQ) -> RatFuncQ { (&self).$m(&rhs) }
        }
        impl $tr<&RatFuncQ> for RatFuncQ {
            type Output = RatFuncQ;
            fn $m(self, rhs: &RatFuncQ) -> RatFuncQ { (&self).$m(rhs) }
        }
        impl $tr<RatFuncQ> for &RatFuncQ {
            type Output = RatFuncQ;
            fn $m(self, rhs: RatFuncQ) -> RatFuncQ { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Sum for RatFuncQ {
    fn sum<I: Iterator<Item = RatFuncQ>>(iter: I) -> Self {
        iter.fold(RatFuncQ::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a RatFuncQ> for RatFuncQ {
    fn sum<I: Iterator<Item = &'a RatFuncQ>>(iter: I) -> Self {
        iter.fold(RatFuncQ::zero(), |acc, x| &acc + x)
    }
}

impl Product for RatFuncQ {
    fn product<I: Iterator<Item = RatFuncQ>>(iter: I) -> Self {
        iter.fold(RatFuncQ::one(), |acc, x| &acc * &x)
    }
}

impl<'a> Product<&'a RatFuncQ> for RatFuncQ {
    fn product<I: Iterator<Item = &'a RatFuncQ>>(iter: I) -> Self {
        iter.fold(RatFuncQ::one(), |acc, x| &acc * x)
    }
}

impl From<i64> for RatFuncQ {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<QPoly> for RatFuncQ {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFuncQ {
        RatFuncQ::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn spec_arith_examples() {
        let a = rf(&[0, 1], &[1, 1]);
        let b = rf(&[1], &[1, 1]);
        assert_eq!(&a + &b, RatFuncQ::one());

        let c = RatFuncQ::from_poly(p(&[1, 0, -1]));
        let d = RatFuncQ::from_poly(p(&[1, -1]));
        assert_eq!(ratfunc_arith(&c, &d, ArithOp::Div).unwrap(), RatFuncQ::from_poly(p(&[1, 1])));

        let e = rf(&[0, 1], &[1, 0, 1]);
        let sq = &e * &e;
        assert_eq!(sq, rf(&[0, 0, 1], &[1, 0, 2, 0, 1]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = RatFuncQ::q();
        assert_eq!(
            ratfunc_arith(&a, &RatFuncQ::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(RatFuncQ::new(p(&[1]), QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = rf(&[2], &[-4]);
        assert_eq!(a.num(), &p(&[-1]));
        assert_eq!(a.den(), &p(&[2]));
        let b = rf(&[0, 3], &[6, 6]);
        assert_eq!(b, rf(&[0, 1], &[2, 2]));
        assert_eq!(b.num(), &p(&[0, 1]));
        assert_eq!(b.den(), &p(&[2, 2]));
        assert_eq!(RatFuncQ::new(QPoly::zero(), p(&[3, 1])).unwrap(), RatFuncQ::zero());
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::one();
        let eps1 = rf(&[0, -1], &[1, 0, 1]);
        assert_eq!(eps1.eval_at(&one).unwrap(), BigRational::new((-1).into(), 2.into()));
        let cancel = rf(&[1, -1], &[1, -1]);
        assert_eq!(cancel.eval_at(&one).unwrap(), one);
        let pole = rf(&[1], &[1, -1]);
        assert!(matches!(pole.eval_at(&one), Err(Error::Pole { .. })));
    }

    #[test]
    fn negative_powers() {
        let qi = RatFuncQ::q_pow(-2);
        assert_eq!(&qi * &RatFuncQ::q_pow(2), RatFuncQ::one());
        assert_eq!(RatFuncQ::q().pow(-3).unwrap(), RatFuncQ::q_pow(-3));
    }
}
