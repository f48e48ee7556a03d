//! Exact coefficient fields.
//!
//! Two fields are supported: the rationals (arbitrary precision) and prime
//! fields `F_p` with `p < 2^31`. Algorithms elsewhere in the crate are generic
//! over [`Scalar`]; the element type carries ordinary arithmetic operators and
//! its [`ScalarField`] context supplies constants, parsing and I/O.
//!
//! The runtime [`Field`] descriptor (`q` or `fp:<p>`) selects one of the two
//! at the command line.

mod prime;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use rand::Rng;
use serde_json::Value;

use crate::error::{Error, Result};

pub use prime::{is_prime, Fp, PrimeField};
pub use rational::{Rational, Rationals};

/// Largest admissible prime modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

/// Runtime field descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "q" {
            return Ok(Field::Rationals);
        }
        let digits = spec.strip_prefix("fp:").ok_or_else(|| Error::MalformedField(spec.to_string()))?;
        let p: u64 = digits.parse().map_err(|_| Error::MalformedField(spec.to_string()))?;
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => u64::from(*p),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Field::parse(s)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An element of an exact field.
///
/// Elements are always stored in canonical form, so derived equality and
/// hashing are the field's equality.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    type Field: ScalarField<Elem = Self>;

    fn field(&self) -> Self::Field;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    /// Multiplicative inverse; fails on zero.
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }
}

/// Context object for a [`Scalar`] type: constants, parsing, I/O.
// `from_*` needs `&self`: an `F_p` element cannot be built without its modulus.
#[allow(clippy::wrong_self_convention)]
pub trait ScalarField: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    type Elem: Scalar<Field = Self>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn descriptor(&self) -> Field;

    fn characteristic(&self) -> u64 {
        self.descriptor().characteristic()
    }

    /// Parses `"3"`, `"-2"`, and for the rationals also `"a/b"`.
    fn parse(&self, text: &str) -> Result<Self::Elem>;
    fn from_json(&self, v: &Value) -> Result<Self::Elem>;
    fn to_json(&self, e: &Self::Elem) -> Value;

    /// A small random element, used by property checks and the CLI's
    /// randomized verification.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
}

/// Builds a field context of type `F` from a runtime descriptor, failing when
/// the descriptor names the other kind of field.
pub trait FromDescriptor: Sized {
    fn from_descriptor(field: Field) -> Result<Self>;
}

impl FromDescriptor for Rationals {
    fn from_descriptor(field: Field) -> Result<Self> {
        match field {
            Field::Rationals => Ok(Rationals),
            other => Err(Error::FieldMismatch(format!("expected q, got {other}"))),
        }
    }
}

impl FromDescriptor for PrimeField {
    fn from_descriptor(field: Field) -> Result<Self> {
        match field {
            Field::Prime(p) => PrimeField::new(u64::from(p)),
            other => Err(Error::FieldMismatch(format!("expected fp:<p>, got {other}"))),
        }
    }
}
