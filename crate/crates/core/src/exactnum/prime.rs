use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rand::Rng;
use serde_json::Value;

use super::{Field, Scalar, ScalarField, MAX_MODULUS};
use crate::error::{Error, Result};

/// Deterministic primality test by trial division; adequate for `p < 2^31`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn elem(&self, v: u64) -> Fp {
        Fp { v: (v % u64::from(self.p)) as u32, p: self.p }
    }
}

/// A residue modulo `p`, stored in `[0, p)` together with its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    v: u32,
    p: u32,
}

impl Fp {
    pub fn value(&self) -> u32 {
        self.v
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn check(&self, rhs: &Fp) {
        debug_assert_eq!(self.p, rhs.p, "mixing residues of different moduli");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl<'a> Add<&'a Fp> for Fp {
    type Output = Fp;
    fn add(self, rhs: &'a Fp) -> Fp {
        self.check(rhs);
        let s = u64::from(self.v) + u64::from(rhs.v);
        let p = u64::from(self.p);
        Fp { v: (if s >= p { s - p } else { s }) as u32, p: self.p }
    }
}

impl<'a> Sub<&'a Fp> for Fp {
    type Output = Fp;
    fn sub(self, rhs: &'a Fp) -> Fp {
        self.check(rhs);
        let v = if self.v >= rhs.v { self.v - rhs.v } else { self.p - (rhs.v - self.v) };
        Fp { v, p: self.p }
    }
}

impl<'a> Mul<&'a Fp> for Fp {
    type Output = Fp;
    fn mul(self, rhs: &'a Fp) -> Fp {
        self.check(rhs);
        let v = (u64::from(self.v) * u64::from(rhs.v)) % u64::from(self.p);
        Fp { v: v as u32, p: self.p }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr for Fp {
            type Output = Fp;
            fn $m(self, rhs: Fp) -> Fp {
                $tr::$m(self, &rhs)
            }
        }
        impl $atr for Fp {
            fn $am(&mut self, rhs: Fp) {
                *self = $tr::$m(*self, &rhs);
            }
        }
        impl<'a> $atr<&'a Fp> for Fp {
            fn $am(&mut self, rhs: &'a Fp) {
                *self = $tr::$m(*self, rhs);
            }
        }
    };
}

by_value!(Add, add, AddAssign, add_assign);
by_value!(Sub, sub, SubAssign, sub_assign);
by_value!(Mul, mul, MulAssign, mul_assign);

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.v == 0 {
            self
        } else {
            Fp { v: self.p - self.v, p: self.p }
        }
    }
}

impl Scalar for Fp {
    type Field = PrimeField;

    fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1
    }

    fn inv(&self) -> Result<Self> {
        if self.v == 0 {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on (v, p).
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(self.v));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.field().from_i64(t0))
    }
}

impl ScalarField for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp { v: 0, p: self.p }
    }

    fn one(&self) -> Fp {
        self.elem(1)
    }

    fn from_i64(&self, v: i64) -> Fp {
        let p = i64::from(self.p);
        Fp { v: v.rem_euclid(p) as u32, p: self.p }
    }

    fn descriptor(&self) -> Field {
        Field::Prime(self.p)
    }

    fn parse(&self, text: &str) -> Result<Fp> {
        text.trim().parse::<i64>().map(|v| self.from_i64(v)).map_err(|_| Error::BadScalar(text.to_string()))
    }

    fn from_json(&self, v: &Value) -> Result<Fp> {
        match v {
            Value::Number(n) if n.is_i64() => Ok(self.from_i64(n.as_i64().unwrap_or_default())),
            Value::Number(n) if n.is_u64() => Ok(self.elem(n.as_u64().unwrap_or_default())),
            Value::String(s) => self.parse(s),
            other => Err(Error::BadScalar(other.to_string())),
        }
    }

    fn to_json(&self, e: &Fp) -> Value {
        Value::from(e.v)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fp {
        self.elem(rng.gen_range(0..u64::from(self.p)))
    }
}
