//! Univariate polynomials in the deformation parameter `s`.
//!
//! A polynomial is a trimmed `Vec` of field elements, lowest degree first;
//! the zero polynomial is the empty vector. All operations hang off the
//! [`PolyArith`] extension trait so they can share a field context.

use crate::field::Field;

pub type Poly<F> = Vec<<F as Field>::Elem>;

pub trait PolyArith: Field {
    fn ptrim(&self, mut a: Poly<Self>) -> Poly<Self> {
        while a.last().map_or(false, |c| self.is_zero(c)) {
            a.pop();
        }
        a
    }

    fn pzero(&self) -> Poly<Self> {
        Vec::new()
    }

    fn pone(&self) -> Poly<Self> {
        vec![self.one()]
    }

    fn pconst(&self, c: Self::Elem) -> Poly<Self> {
        if self.is_zero(&c) {
            Vec::new()
        } else {
            vec![c]
        }
    }

    fn pis_zero(&self, a: &Poly<Self>) -> bool {
        a.is_empty()
    }

    fn padd(&self, a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        let n = a.len().max(b.len());
        let zero = self.zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            out.push(self.add(x, y));
        }
        self.ptrim(out)
    }

    fn psub(&self, a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        let n = a.len().max(b.len());
        let zero = self.zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            out.push(self.sub(x, y));
        }
        self.ptrim(out)
    }

    fn pneg(&self, a: &Poly<Self>) -> Poly<Self> {
        a.iter().map(|c| self.neg(c)).collect()
    }

    fn pmul(&self, a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(x, y));
            }
        }
        self.ptrim(out)
    }

    fn pscale(&self, a: &Poly<Self>, c: &Self::Elem) -> Poly<Self> {
        if self.is_zero(c) {
            return Vec::new();
        }
        a.iter().map(|x| self.mul(x, c)).collect()
    }

    /// Multiply by `s^k`.
    fn pshift(&self, a: &Poly<Self>, k: usize) -> Poly<Self> {
        if a.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); k];
        out.extend(a.iter().cloned());
        out
    }

    /// s-adic valuation: index of the lowest nonzero coefficient.
    /// `None` for the zero polynomial.
    fn pval(&self, a: &Poly<Self>) -> Option<usize> {
        a.iter().position(|c| !self.is_zero(c))
    }

    /// Divide by `s^k`; the valuation must be at least `k`.
    fn pshr(&self, a: &Poly<Self>, k: usize) -> Poly<Self> {
        if a.is_empty() {
            return Vec::new();
        }
        debug_assert!(a[..k].iter().all(|c| self.is_zero(c)));
        a[k..].to_vec()
    }

    fn peval(&self, a: &Poly<Self>, x: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        for c in a.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    fn peval0(&self, a: &Poly<Self>) -> Self::Elem {
        a.first().cloned().unwrap_or_else(|| self.zero())
    }

    /// Euclidean division; the divisor must be nonzero.
    fn pdivrem(&self, a: &Poly<Self>, b: &Poly<Self>) -> (Poly<Self>, Poly<Self>) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let lead_inv = self.inv(b.last().unwrap()).expect("trimmed leading coeff");
        let mut rem = a.clone();
        let mut quot = vec![self.zero(); a.len() - b.len() + 1];
        for k in (0..quot.len()).rev() {
            let idx = k + b.len() - 1;
            if idx >= rem.len() || self.is_zero(&rem[idx]) {
                continue;
            }
            let q = self.mul(&rem[idx], &lead_inv);
            for (j, c) in b.iter().enumerate() {
                rem[k + j] = self.sub(&rem[k + j], &self.mul(&q, c));
            }
            quot[k] = q;
        }
        (self.ptrim(quot), self.ptrim(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    fn pdiv_exact(&self, a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        let (q, r) = self.pdivrem(a, b);
        assert!(r.is_empty(), "inexact polynomial division");
        q
    }

    /// Monic gcd; gcd(0, 0) = 0. Remainders are content-normalized each
    /// step, which keeps rational coefficients from exploding (the
    /// primitive remainder sequence); fields without coefficient growth
    /// skip the normalization.
    fn pgcd(&self, a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        let strip = |p: Poly<Self>| -> Poly<Self> {
            match self.content(p.iter()) {
                Some(c) => {
                    let inv = self.inv(&c).unwrap();
                    self.pscale(&p, &inv)
                }
                None => p,
            }
        };
        let (mut a, mut b) = (strip(a.clone()), strip(b.clone()));
        while !b.is_empty() {
            let (_, r) = self.pdivrem(&a, &b);
            a = b;
            b = strip(r);
        }
        if let Some(c) = a.last() {
            let inv = self.inv(c).unwrap();
            a = self.pscale(&a, &inv);
        }
        a
    }

    /// (1+s)^k for k >= 0.
    fn ppow_one_plus_s(&self, k: u32) -> Poly<Self> {
        let base = vec![self.one(), self.one()];
        let mut out = self.pone();
        for _ in 0..k {
            out = self.pmul(&out, &base);
        }
        out
    }

    /// Truncate to degree < `order`.
    fn ptruncate(&self, a: &Poly<Self>, order: usize) -> Poly<Self> {
        self.ptrim(a.iter().take(order).cloned().collect())
    }

    fn pmul_trunc(&self, a: &Poly<Self>, b: &Poly<Self>, order: usize) -> Poly<Self> {
        self.ptruncate(&self.pmul(a, b), order)
    }

    fn prender(&self, a: &Poly<Self>) -> String {
        if a.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in a.iter().enumerate() {
            if self.is_zero(c) {
                continue;
            }
            let coeff = self.render(c);
            let part = match i {
                0 => coeff,
                1 if coeff == "1" => "s".to_string(),
                1 => format!("{coeff}*s"),
                _ if coeff == "1" => format!("s^{i}"),
                _ => format!("{coeff}*s^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl<F: Field> PolyArith for F {}
