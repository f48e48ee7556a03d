use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::Value;

use super::{Field, Scalar, ScalarField};
use crate::error::{Error, Result};

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (guaranteed by `BigRational`'s normalization).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom))))
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$m(&rhs.0))
            }
        }
        impl $atr for Rational {
            fn $am(&mut self, rhs: Rational) {
                self.0.$am(rhs.0);
            }
        }
        impl<'a> $atr<&'a Rational> for Rational {
            fn $am(&mut self, rhs: &'a Rational) {
                self.0.$am(&rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Scalar for Rational {
    type Field = Rationals;

    fn field(&self) -> Rationals {
        Rationals
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }
}

fn parse_bigint(text: &str) -> Option<BigInt> {
    text.trim().parse::<BigInt>().ok()
}

impl ScalarField for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational(BigRational::zero())
    }

    fn one(&self) -> Rational {
        Rational(BigRational::one())
    }

    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(v)
    }

    fn descriptor(&self) -> Field {
        Field::Rationals
    }

    fn parse(&self, text: &str) -> Result<Rational> {
        let bad = || Error::BadScalar(text.to_string());
        match text.split_once('/') {
            None => parse_bigint(text).map(|n| Rational(BigRational::from_integer(n))).ok_or_else(bad),
            Some((n, d)) => {
                let n = parse_bigint(n).ok_or_else(bad)?;
                let d = parse_bigint(d).ok_or_else(bad)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rational(BigRational::new(n, d)))
            }
        }
    }

    fn from_json(&self, v: &Value) -> Result<Rational> {
        match v {
            Value::String(s) => self.parse(s),
            Value::Number(n) if n.is_i64() => Ok(self.from_i64(n.as_i64().unwrap_or_default())),
            other => Err(Error::BadScalar(other.to_string())),
        }
    }

    fn to_json(&self, e: &Rational) -> Value {
        Value::String(e.to_string())
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        // Mostly small integers, occasionally a half or a third, often zero.
        if rng.gen_bool(0.3) {
            return self.zero();
        }
        let numer = rng.gen_range(-3i64..=3);
        let denom = if rng.gen_bool(0.2) { rng.gen_range(2i64..=3) } else { 1 };
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }
}

impl Rational {
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}
