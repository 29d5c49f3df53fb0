use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::ratcore::RatFuncQ;

/// Polynomial in `z` with coefficients in `Q(q)`, ascending degree.
///
/// Canonical length: the leading coefficient is nonzero, the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<RatFuncQ>", into = "Vec<RatFuncQ>")]
pub struct ZPoly {
    coeffs: Vec<RatFuncQ>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<RatFuncQ>) -> Self {
        while coeffs.last().is_some_and(RatFuncQ::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RatFuncQ::one())
    }

    pub fn constant(c: RatFuncQ) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Self::monomial(RatFuncQ::one(), 1)
    }

    pub fn monomial(c: RatFuncQ, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![RatFuncQ::zero(); k + 1];
        coeffs[k] = c;
        ZPoly { coeffs }
    }

    /// `c0 + c1 z`.
    pub fn linear(c0: RatFuncQ, c1: RatFuncQ) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[RatFuncQ] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFuncQ {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> RatFuncQ {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(RatFuncQ::is_one)
    }

    pub fn scale(&self, c: &RatFuncQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Value at `z = x`.
    pub fn eval(&self, x: &RatFuncQ) -> RatFuncQ {
        if x.is_zero() {
            return self.coeff(0);
        }
        let mut acc = RatFuncQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(u z + v)`.
    pub fn compose_affine(&self, u: &RatFuncQ, v: &RatFuncQ) -> Self {
        let lin = ZPoly::linear(v.clone(), u.clone());
        let mut acc = ZPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &ZPoly::constant(c.clone());
        }
        acc
    }

    /// Human-readable form, e.g. `z^2 + (q/(1 + q^2))*z - 1`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl From<Vec<RatFuncQ>> for ZPoly {
    fn from(coeffs: Vec<RatFuncQ>) -> Self {
        ZPoly::new(coeffs)
    }
}

impl From<ZPoly> for Vec<RatFuncQ> {
    fn from(p: ZPoly) -> Self {
        p.coeffs
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({self})")
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let zpart = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                write!(f, "({c})")?;
            } else if c.is_one() {
                f.write_str(&zpart)?;
            } else {
                write!(f, "({c})*{zpart}")?;
            }
        }
        Ok(())
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        ZPoly::new(coeffs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self + &(-rhs)
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![RatFuncQ::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        ZPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ZPoly {
            type Output = ZPoly;
            fn $m(self, rhs: ZPoly) -> ZPoly { (&self).$m(&rhs) }
        }
        impl $tr<&ZPoly> for ZPoly {
            type Output = ZPoly;
            fn $m(self, rhs: &ZPoly) -> ZPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
