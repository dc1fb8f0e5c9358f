//! Elements of the fraction field `Q(v)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::LaurentScalar;
use crate::error::{Error, Result};

/// A quotient `num / den` of Laurent polynomials.
///
/// Values are reduced by the polynomial gcd on construction, with the
/// denominator scaled to lowest exponent 0 and positive leading coefficient.
/// Equality is decided by cross-multiplication, so it does not depend on the
/// reduction being canonical.
#[derive(Clone, Serialize, Deserialize)]
pub struct LaurentFraction {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl LaurentFraction {
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentScalar, den: LaurentScalar) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: LaurentScalar::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        // move the monomial part of the denominator into the numerator
        let lo = den.min_exp().unwrap_or(0);
        num = num.shift(-lo);
        den = den.shift(-lo);
        if den.leading_coeff() < 0 {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentScalar::zero(),
            den: LaurentScalar::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentScalar::one())
    }

    pub fn numer(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denom(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial equal to this fraction, if there is one.
    pub fn as_laurent(&self) -> Option<LaurentScalar> {
        self.num.div_exact(&self.den)
    }

    pub fn bar(&self) -> Self {
        Self::reduced(self.num.bar(), self.den.bar())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn mul_scalar(&self, s: &LaurentScalar) -> Self {
        Self::reduced(&self.num * s, self.den.clone())
    }
}

impl From<LaurentScalar> for LaurentFraction {
    fn from(num: LaurentScalar) -> Self {
        Self {
            num,
            den: LaurentScalar::one(),
        }
    }
}

impl From<i64> for LaurentFraction {
    fn from(c: i64) -> Self {
        Self::from(LaurentScalar::constant(c))
    }
}

impl PartialEq for LaurentFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for LaurentFraction {}

impl Add for &LaurentFraction {
    type Output = LaurentFraction;
    fn add(self, rhs: &LaurentFraction) -> LaurentFraction {
        if self.den == rhs.den {
            return LaurentFraction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        LaurentFraction::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &LaurentFraction {
    type Output = LaurentFraction;
    fn sub(self, rhs: &LaurentFraction) -> LaurentFraction {
        self + &(-rhs)
    }
}

impl Mul for &LaurentFraction {
    type Output = LaurentFraction;
    fn mul(self, rhs: &LaurentFraction) -> LaurentFraction {
        LaurentFraction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &LaurentFraction {
    type Output = LaurentFraction;
    /// Panics on division by zero.
    fn div(self, rhs: &LaurentFraction) -> LaurentFraction {
        assert!(!rhs.is_zero(), "division by zero in Q(v)");
        LaurentFraction::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        LaurentFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<LaurentFraction> for LaurentFraction {
            type Output = LaurentFraction;
            fn $method(self, rhs: LaurentFraction) -> LaurentFraction {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&LaurentFraction> for LaurentFraction {
            type Output = LaurentFraction;
            fn $method(self, rhs: &LaurentFraction) -> LaurentFraction {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        -&self
    }
}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_multiplication_equality() {
        let v = LaurentScalar::v();
        let a = LaurentFraction::new(v.clone(), v.pow(2) - LaurentScalar::one()).unwrap();
        let b = LaurentFraction::new(v.pow(2) + v.pow(4), v.pow(5) - v.clone()).unwrap();
        assert_eq!(a, b);
        assert!(LaurentFraction::new(v, LaurentScalar::zero()).is_err());
    }

    #[test]
    fn sums_clear_denominators() {
        let v = LaurentScalar::v();
        let d = v.pow(2) - LaurentScalar::one();
        let a = LaurentFraction::new(v.pow(2), d.clone()).unwrap();
        let b = LaurentFraction::new(-LaurentScalar::one(), d).unwrap();
        assert_eq!((a + b).as_laurent(), Some(LaurentScalar::one()));
    }
}
