//! Exact rational scalars.
//!
//! Every computation in this crate runs over the rationals with
//! arbitrary-precision numerator and denominator, so identity checks are
//! exact and golden tables compare bit-for-bit. Values are kept in canonical
//! form (reduced fraction, positive denominator) at all times.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An exact rational number, the ground field for all structure constants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`. Panics if `den == 0`; use [`Scalar::parse`] for
    /// untrusted input.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::invalid_input("division by zero"));
        }
        Ok(Scalar(self.0.recip()))
    }

    /// Parses a rational literal: `"p"` or `"p/q"` with optional sign,
    /// arbitrary-precision digits, nonzero `q`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::parse(format!("invalid rational literal {s:?}"));
        if s.is_empty() {
            return Err(bad());
        }
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Scalar(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(Error::parse(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar(BigRational::new(p, q)))
            }
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical form: `"p"` for integers, `"p/q"` otherwise, `q > 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1", "-7", "1/2", "-3/4", "22/7"] {
            let v = Scalar::parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(Scalar::parse("2/4").unwrap(), Scalar::ratio(1, 2));
        assert_eq!(Scalar::parse("3/-6").unwrap(), Scalar::ratio(-1, 2));
        assert_eq!(Scalar::parse("3/-6").unwrap().to_string(), "-1/2");
        assert_eq!(Scalar::parse("-0").unwrap(), Scalar::zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "x", "1/2/3", "1.5", "--2"] {
            assert!(Scalar::parse(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn field_arithmetic_is_exact() {
        let third = Scalar::ratio(1, 3);
        let sum = third.clone() + third.clone() + third.clone();
        assert!(sum.is_one());
        let x = Scalar::ratio(-5, 6);
        assert!((x.clone() * x.recip().unwrap()).is_one());
    }
}
