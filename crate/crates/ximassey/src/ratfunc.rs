//! The rational function field k(s), as a [`Field`] over any base field.
//!
//! Elements are reduced fractions of polynomials with a monic denominator.
//! This gives the generic sparse reduction engine a second scalar type, so
//! kernels over k(s) come from the same code path as kernels over k.

use crate::error::Error;
use crate::field::Field;
use crate::poly::{Poly, PolyArith};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn<E> {
    pub num: Vec<E>,
    pub den: Vec<E>,
}

#[derive(Clone, Debug)]
pub struct RatFuncField<F: Field> {
    pub base: F,
}

impl<F: Field> RatFuncField<F> {
    pub fn new(base: &F) -> Self {
        RatFuncField { base: base.clone() }
    }

    fn normalized(&self, num: Poly<F>, den: Poly<F>) -> RatFn<F::Elem> {
        let f = &self.base;
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFn { num: Vec::new(), den: f.pone() };
        }
        let g = f.pgcd(&num, &den);
        let (mut num, mut den) = if g.len() > 1 {
            (f.pdiv_exact(&num, &g), f.pdiv_exact(&den, &g))
        } else {
            (num, den)
        };
        let lead = den.last().unwrap().clone();
        if !f.is_one(&lead) {
            let inv = f.inv(&lead).unwrap();
            num = f.pscale(&num, &inv);
            den = f.pscale(&den, &inv);
        }
        RatFn { num, den }
    }

    pub fn from_poly(&self, num: Poly<F>) -> RatFn<F::Elem> {
        RatFn { num: self.base.ptrim(num), den: self.base.pone() }
    }
}

impl<F: Field> Field for RatFuncField<F> {
    type Elem = RatFn<F::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFn { num: Vec::new(), den: self.base.pone() }
    }
    fn one(&self) -> Self::Elem {
        RatFn { num: self.base.pone(), den: self.base.pone() }
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        let num = f.padd(&f.pmul(&a.num, &b.den), &f.pmul(&b.num, &a.den));
        let den = f.pmul(&a.den, &b.den);
        self.normalized(num, den)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFn { num: self.base.pneg(&a.num), den: a.den.clone() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        if a.num.is_empty() || b.num.is_empty() {
            return self.zero();
        }
        // cross-cancel before multiplying to keep degrees down
        let g1 = f.pgcd(&a.num, &b.den);
        let g2 = f.pgcd(&b.num, &a.den);
        let an = if g1.len() > 1 { f.pdiv_exact(&a.num, &g1) } else { a.num.clone() };
        let bd = if g1.len() > 1 { f.pdiv_exact(&b.den, &g1) } else { b.den.clone() };
        let bn = if g2.len() > 1 { f.pdiv_exact(&b.num, &g2) } else { b.num.clone() };
        let ad = if g2.len() > 1 { f.pdiv_exact(&a.den, &g2) } else { a.den.clone() };
        self.normalized(f.pmul(&an, &bn), f.pmul(&ad, &bd))
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_empty() {
            return None;
        }
        Some(self.normalized(a.den.clone(), a.num.clone()))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_empty()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        RatFn { num: self.base.pconst(self.base.from_i64(n)), den: self.base.pone() }
    }
    fn from_bigint(&self, n: &num_bigint::BigInt) -> Self::Elem {
        RatFn { num: self.base.pconst(self.base.from_bigint(n)), den: self.base.pone() }
    }
    fn parse(&self, s: &str) -> Result<Self::Elem, Error> {
        Ok(self.from_i64(
            s.trim().parse::<i64>().map_err(|_| Error::BadFieldValue(s.to_string()))?,
        ))
    }
    fn render(&self, a: &Self::Elem) -> String {
        let f = &self.base;
        if a.den == f.pone() {
            f.prender(&a.num)
        } else {
            format!("({}) / ({})", f.prender(&a.num), f.prender(&a.den))
        }
    }
}
