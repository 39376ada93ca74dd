//! Exact coefficient fields: prime fields F_p and the rationals.
//!
//! Arithmetic is exact everywhere; there is no floating point in this crate.
//! Fields are passed around as small context objects and elements are plain
//! data, so a `u64` residue suffices for F_p and `BigRational` for Q.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A coefficient field. Operations take the field by reference so prime
/// fields can carry their modulus without baking it into the element type.
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Parse `n` or `a/b` (the `a/b` form is only meaningful over Q, but
    /// F_p accepts it as a modular quotient for uniformity).
    fn parse(&self, s: &str) -> Result<Self::Elem, Error>;
    fn render(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error> {
        match self.inv(b) {
            Some(binv) => Ok(self.mul(a, &binv)),
            None => Err(Error::DivisionByZero),
        }
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// A common scale of a coefficient collection, used to normalize rows
    /// during fraction-free elimination (dividing a row by a nonzero
    /// constant is a unit operation). Over Q this is the positive content
    /// gcd(numerators)/lcm(denominators); fields whose elements do not
    /// grow return `None`.
    fn content<'a>(&self, _values: impl Iterator<Item = &'a Self::Elem>) -> Option<Self::Elem>
    where
        Self::Elem: 'a,
    {
        None
    }
}

/// The rationals with arbitrary-precision integers underneath.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn parse(&self, s: &str) -> Result<BigRational, Error> {
        let bad = || Error::BadFieldValue(s.to_string());
        match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(BigRational::new(num, den))
            }
            None => {
                let n: BigInt = s.trim().parse().map_err(|_| bad())?;
                Ok(BigRational::from_integer(n))
            }
        }
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn content<'a>(&self, values: impl Iterator<Item = &'a BigRational>) -> Option<BigRational> {
        use num_integer::Integer;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        let mut any = false;
        for v in values {
            if v.is_zero() {
                continue;
            }
            any = true;
            num_gcd = num_gcd.gcd(v.numer());
            den_lcm = den_lcm.lcm(v.denom());
        }
        if !any {
            return None;
        }
        let c = BigRational::new(num_gcd, den_lcm);
        if c.is_one() {
            None
        } else {
            Some(c)
        }
    }
}

/// F_p for a prime p. Elements are residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut t, mut new_t) = (0i128, 1i128);
        let (mut r, mut new_r) = (self.p as i128, *a as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1, "p is prime so gcd(a, p) = 1");
        let t = t.rem_euclid(self.p as i128);
        Some(t as u64)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = n % BigInt::from(self.p);
        let m = if m.is_negative() { m + BigInt::from(self.p) } else { m };
        let digits = m.to_u64_digits().1;
        digits.first().copied().unwrap_or(0)
    }
    fn parse(&self, s: &str) -> Result<u64, Error> {
        let bad = || Error::BadFieldValue(s.to_string());
        match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                self.div(&self.from_bigint(&num), &self.from_bigint(&den))
            }
            None => {
                let n: BigInt = s.trim().parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Which field a run uses; parsed from `Q` or `F<p>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix('F').or_else(|| s.strip_prefix('f')) {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::BadFieldSpec(s.to_string()))?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::BadFieldSpec(s.to_string()))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f5_product() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.mul(&3, &4), 2);
    }

    #[test]
    fn f2_sum() {
        let f = PrimeField::new(2).unwrap();
        assert_eq!(f.add(&1, &1), 0);
    }

    #[test]
    fn rational_sum() {
        let q = Rationals;
        let third = q.parse("1/3").unwrap();
        let sixth = q.parse("1/6").unwrap();
        assert_eq!(q.add(&third, &sixth), q.parse("1/2").unwrap());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let q = Rationals;
        assert!(q.div(&q.one(), &q.zero()).is_err());
        let f = PrimeField::new(7).unwrap();
        assert!(f.div(&3, &0).is_err());
    }

    #[test]
    fn prime_field_inverses() {
        let f = PrimeField::new(97).unwrap();
        for a in 1..97u64 {
            let i = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &i), 1);
        }
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("F2").unwrap(), FieldSpec::Prime(2));
        assert_eq!(FieldSpec::parse("F101").unwrap(), FieldSpec::Prime(101));
        assert!(FieldSpec::parse("F4").is_err());
        assert!(FieldSpec::parse("R").is_err());
    }

    #[test]
    fn from_bigint_reduces_negatives() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.from_i64(-1), 2);
        assert_eq!(f.from_bigint(&BigInt::from(-7)), 2);
    }
}
