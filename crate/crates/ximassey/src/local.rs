//! Elements of the local ring at s = 0, represented as p(s) / (1+s)^e.
//!
//! The monodromy unit of the deformation complex is 1+s, so every matrix
//! entry we ever build lives in k[s] with powers of (1+s) inverted. The
//! stored fraction is kept reduced: a nonzero numerator shares no (1+s)
//! factor with the denominator. Valuation-0 elements are units of the
//! local ring (not necessarily of the represented subring, which is fine:
//! elementary divisors and kernels are taken over the local ring).

use crate::field::Field;
use crate::poly::{Poly, PolyArith};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalElem<F: Field> {
    pub num: Poly<F>,
    pub den_pow: u32,
}

impl<F: Field> LocalElem<F> {
    pub fn zero() -> Self {
        LocalElem { num: Vec::new(), den_pow: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Build from raw parts and reduce the fraction.
    pub fn new(field: &F, num: Poly<F>, den_pow: u32) -> Self {
        let mut num = field.ptrim(num);
        if num.is_empty() {
            return LocalElem::zero();
        }
        let mut den_pow = den_pow;
        let minus_one = field.neg(&field.one());
        let one_plus_s = vec![field.one(), field.one()];
        while den_pow > 0 && field.is_zero(&field.peval(&num, &minus_one)) {
            num = field.pdiv_exact(&num, &one_plus_s);
            den_pow -= 1;
        }
        LocalElem { num, den_pow }
    }

    pub fn from_const(field: &F, c: F::Elem) -> Self {
        LocalElem { num: field.pconst(c), den_pow: 0 }
    }

    pub fn from_i64(field: &F, n: i64) -> Self {
        Self::from_const(field, field.from_i64(n))
    }

    /// (1+s)^k for any integer k; negative exponents go to the denominator.
    pub fn unit_pow(field: &F, k: i64) -> Self {
        if k >= 0 {
            LocalElem { num: field.ppow_one_plus_s(k as u32), den_pow: 0 }
        } else {
            LocalElem { num: field.pone(), den_pow: (-k) as u32 }
        }
    }

    /// s-adic valuation; `None` means +infinity (the element is zero).
    pub fn valuation(&self, field: &F) -> Option<usize> {
        field.pval(&self.num)
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        let e = self.den_pow.max(other.den_pow);
        let a = field.pmul(&self.num, &field.ppow_one_plus_s(e - self.den_pow));
        let b = field.pmul(&other.num, &field.ppow_one_plus_s(e - other.den_pow));
        LocalElem::new(field, field.padd(&a, &b), e)
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    pub fn neg(&self, field: &F) -> Self {
        LocalElem { num: field.pneg(&self.num), den_pow: if self.num.is_empty() { 0 } else { self.den_pow } }
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LocalElem::zero();
        }
        let num = field.pmul(&self.num, &other.num);
        let den_pow = self.den_pow + other.den_pow;
        if den_pow == 0 {
            return LocalElem { num, den_pow };
        }
        // a factor with exponent 0 may carry (1+s) factors in its numerator
        LocalElem::new(field, num, den_pow)
    }

    /// Value at s = 0; the denominator evaluates to 1 there.
    pub fn eval0(&self, field: &F) -> F::Elem {
        field.peval0(&self.num)
    }

    /// Power-series expansion mod s^order, as a polynomial of degree < order.
    pub fn series(&self, field: &F, order: usize) -> Poly<F> {
        if self.is_zero() || order == 0 {
            return Vec::new();
        }
        let inv_den = inv_unit_series(field, self.den_pow, order);
        field.pmul_trunc(&self.num, &inv_den, order)
    }

    pub fn render(&self, field: &F) -> String {
        if self.den_pow == 0 {
            field.prender(&self.num)
        } else {
            format!("({}) / (1+s)^{}", field.prender(&self.num), self.den_pow)
        }
    }
}

/// (1+s)^{-e} mod s^order. Binomial coefficients are computed as exact
/// integers before reduction so this works in every characteristic.
fn inv_unit_series<F: Field>(field: &F, e: u32, order: usize) -> Poly<F> {
    use num_bigint::BigInt;
    let mut out = Vec::with_capacity(order);
    // coefficient of s^j is (-1)^j * C(e+j-1, j)
    let mut binom = BigInt::from(1);
    for j in 0..order {
        if j > 0 {
            binom = binom * BigInt::from(e as i64 + j as i64 - 1) / BigInt::from(j as i64);
        }
        let c = field.from_bigint(&binom);
        out.push(if j % 2 == 0 { c } else { field.neg(&c) });
    }
    field.ptrim(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn valuation_of_shifted_poly() {
        let q = Rationals;
        // s^2 + s^3
        let x = LocalElem::new(&q, vec![q.zero(), q.zero(), q.one(), q.one()], 0);
        assert_eq!(x.valuation(&q), Some(2));
    }

    #[test]
    fn unit_with_denominator_has_valuation_zero() {
        let q = Rationals;
        let x = LocalElem::unit_pow(&q, -3);
        assert_eq!(x.valuation(&q), Some(0));
    }

    #[test]
    fn zero_has_infinite_valuation() {
        let q = Rationals;
        assert_eq!(LocalElem::<Rationals>::zero().valuation(&q), None);
    }

    #[test]
    fn fraction_reduction() {
        let q = Rationals;
        // (1+s)^2 / (1+s)^3 reduces to 1 / (1+s)
        let x = LocalElem::new(&q, q.ppow_one_plus_s(2), 3);
        assert_eq!(x.num, q.pone());
        assert_eq!(x.den_pow, 1);
    }

    #[test]
    fn unit_powers_multiply_to_one() {
        let f = PrimeField::new(5).unwrap();
        let a = LocalElem::unit_pow(&f, 4);
        let b = LocalElem::unit_pow(&f, -4);
        let prod = a.mul(&f, &b);
        assert_eq!(prod, LocalElem::from_i64(&f, 1));
    }

    #[test]
    fn series_inverts_the_denominator() {
        let q = Rationals;
        let x = LocalElem::unit_pow(&q, -2); // (1+s)^{-2}
        let s = x.series(&q, 4);
        // 1 - 2s + 3s^2 - 4s^3
        assert_eq!(
            s,
            vec![q.from_i64(1), q.from_i64(-2), q.from_i64(3), q.from_i64(-4)]
        );
        // multiplying back by (1+s)^2 gives 1 mod s^4
        let back = q.pmul_trunc(&s, &q.ppow_one_plus_s(2), 4);
        assert_eq!(back, q.pone());
    }

    #[test]
    fn series_in_char_2() {
        let f = PrimeField::new(2).unwrap();
        let x = LocalElem::unit_pow(&f, -1);
        // 1/(1+s) = 1 + s + s^2 + ... over F_2
        assert_eq!(x.series(&f, 5), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn addition_finds_common_denominator() {
        let q = Rationals;
        // 1/(1+s) + s/(1+s)^2 = (1 + 2s)/(1+s)^2
        let a = LocalElem::unit_pow(&q, -1);
        let b = LocalElem::new(&q, vec![q.zero(), q.one()], 2);
        let sum = a.add(&q, &b);
        assert_eq!(sum.num, vec![q.from_i64(1), q.from_i64(2)]);
        assert_eq!(sum.den_pow, 2);
    }
}
