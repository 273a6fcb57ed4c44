//! Coefficient fields.
//!
//! Operators are generic over a [`Field`]. Two fields ship with the crate:
//! exact rationals ([`Rational`]) and prime fields ([`Fp`]). Field elements
//! never need a global context for arithmetic; a [`Field::Context`] is only
//! required to build constants from integers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero in coefficient field")]
    DivisionByZero,
    #[error("malformed coefficient literal `{0}`")]
    Malformed(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

/// An exact coefficient field.
pub trait Field:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Data needed to build constants (the modulus for prime fields).
    type Context: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn from_integer(ctx: &Self::Context, n: &BigInt) -> Self;

    fn from_ratio(ctx: &Self::Context, num: &BigInt, den: &BigInt) -> Result<Self, ScalarError> {
        let d = Self::from_integer(ctx, den);
        let inv = d.inv().ok_or(ScalarError::DivisionByZero)?;
        Ok(Self::from_integer(ctx, num).mul(&inv))
    }

    fn one(ctx: &Self::Context) -> Self {
        Self::from_integer(ctx, &BigInt::one())
    }

    fn context(&self) -> Self::Context;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Multiplies by the image of a natural number in the field.
    fn mul_natural(&self, n: &BigUint) -> Self;

    /// Lossless string form used by the JSON interchange format.
    fn to_exact_string(&self) -> String;

    /// Inverse of [`Field::to_exact_string`]; also accepts plain integers.
    fn parse_exact(ctx: &Self::Context, s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| ScalarError::Malformed(s.to_owned()))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| ScalarError::Malformed(s.to_owned()))?;
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::from_ratio(ctx, &num, &den)
    }
}

/// Arbitrary-precision rational number, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
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

impl Field for Rational {
    type Context = ();

    fn from_integer(_: &(), n: &BigInt) -> Self {
        Rational(BigRational::from_integer(n.clone()))
    }

    fn from_ratio(_: &(), num: &BigInt, den: &BigInt) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.clone(), den.clone())))
    }

    fn context(&self) {}

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }

    fn mul_natural(&self, n: &BigUint) -> Self {
        if n.is_one() {
            return self.clone();
        }
        let n = BigInt::from(n.clone());
        Rational(&self.0 * BigRational::from_integer(n))
    }

    fn to_exact_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Element of the prime field F_p. The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

/// Modulus of a prime field, checked for primality at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Fp {
    pub fn new(value: i64, p: Prime) -> Self {
        let m = p.0 as i128;
        Fp {
            value: (value as i128).rem_euclid(m) as u64,
            modulus: p.0,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn same(&self, v: u64) -> Fp {
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }

    fn pow(&self, mut e: u64) -> Fp {
        let m = self.modulus as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128 % m;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        self.same(acc as u64)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    type Context = Prime;

    fn from_integer(ctx: &Prime, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(ctx.0));
        Fp {
            value: r.to_u64().expect("residue fits the modulus"),
            modulus: ctx.0,
        }
    }

    fn context(&self) -> Prime {
        Prime(self.modulus)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u128 + other.value as u128) % self.modulus as u128;
        self.same(s as u64)
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = self.modulus as u128;
        let s = (self.value as u128 + m - other.value as u128) % m;
        self.same(s as u64)
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = (self.value as u128 * other.value as u128) % self.modulus as u128;
        self.same(s as u64)
    }

    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            self.same(self.modulus - self.value)
        }
    }

    fn inv(&self) -> Option<Self> {
        (self.value != 0).then(|| self.pow(self.modulus - 2))
    }

    fn mul_natural(&self, n: &BigUint) -> Self {
        let r = (n % self.modulus)
            .to_u64()
            .expect("residue fits the modulus");
        self.mul(&self.same(r))
    }

    fn to_exact_string(&self) -> String {
        self.value.to_string()
    }
}

/// Splits off a leading minus sign for printing: `(negative, magnitude)`.
pub fn split_sign<K: Field>(c: &K) -> (bool, K) {
    let s = c.to_exact_string();
    if s.starts_with('-') {
        (true, c.neg())
    } else {
        (false, c.clone())
    }
}

/// Integer `n` viewed as a rational, for tests and examples.
pub fn q(n: i64) -> Rational {
    Rational::integer(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let a = Rational::new(6, -4);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(a.to_exact_string(), "-3/2");
        assert_eq!(q(4).to_exact_string(), "4/1");
    }

    #[test]
    fn rational_parse_round_trip() {
        let a = Rational::new(-7, 3);
        assert_eq!(Rational::parse_exact(&(), &a.to_exact_string()).unwrap(), a);
        assert_eq!(Rational::parse_exact(&(), "12").unwrap(), q(12));
        assert_eq!(
            Rational::parse_exact(&(), "1/0"),
            Err(ScalarError::DivisionByZero)
        );
        assert!(Rational::parse_exact(&(), "x/2").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let p = Prime::new(7).unwrap();
        let a = Fp::new(3, p);
        let b = Fp::new(-1, p);
        assert_eq!(b.value(), 6);
        assert_eq!(a.add(&b).value(), 2);
        assert_eq!(a.sub(&b).value(), 4);
        assert_eq!(a.mul(&b).value(), 4);
        assert_eq!(a.mul(&a.inv().unwrap()).value(), 1);
        assert!(Fp::new(0, p).inv().is_none());
        assert_eq!(a.mul_natural(&BigUint::from(10u32)).value(), 2);
        assert_eq!(
            Fp::from_ratio(&p, &BigInt::from(1), &BigInt::from(7)),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(Fp::parse_exact(&p, "1/2").unwrap().value(), 4);
    }

    #[test]
    fn primality() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(32003).is_ok());
        assert_eq!(Prime::new(1), Err(ScalarError::NotPrime(1)));
        assert_eq!(Prime::new(91), Err(ScalarError::NotPrime(91)));
    }
}
