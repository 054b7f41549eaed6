//! Dense univariate polynomials over an exact field, constant term first.

use crate::exactalg::Field;

/// Polynomial ring `F[t]`; polynomials are plain coefficient vectors with no
/// trailing zeros (the zero polynomial is the empty vector).
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    pub field: F,
}

pub type Poly<T> = Vec<T>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        Self { field }
    }

    pub fn trim(&self, mut p: Poly<F::Elem>) -> Poly<F::Elem> {
        while p.last().is_some_and(|c| self.field.is_zero(c)) {
            p.pop();
        }
        p
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self, p: &[F::Elem]) -> Option<usize> {
        p.iter().rposition(|c| !self.field.is_zero(c))
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let out = (0..n)
            .map(|i| self.field.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.trim(out)
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let z = self.field.zero();
        let out = (0..n)
            .map(|i| self.field.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
            .collect();
        self.trim(out)
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.field.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.field.add(&out[i + j], &self.field.mul(x, y));
            }
        }
        self.trim(out)
    }

    pub fn scale(&self, a: &[F::Elem], c: &F::Elem) -> Poly<F::Elem> {
        self.trim(a.iter().map(|x| self.field.mul(x, c)).collect())
    }

    /// Euclidean division. Panics on division by zero.
    pub fn divrem(&self, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = self.degree(b).expect("division by the zero polynomial");
        let lead_inv = self.field.inv(&b[db]).expect("nonzero lead");
        let mut r = self.trim(a.to_vec());
        let Some(da) = self.degree(&r) else {
            return (Vec::new(), Vec::new());
        };
        if da < db {
            return (Vec::new(), r);
        }
        let mut q = vec![self.field.zero(); da - db + 1];
        while let Some(dr) = self.degree(&r) {
            if dr < db {
                break;
            }
            let c = self.field.mul(&r[dr], &lead_inv);
            let shift = dr - db;
            for (i, bi) in b[..=db].iter().enumerate() {
                r[shift + i] = self.field.sub(&r[shift + i], &self.field.mul(&c, bi));
            }
            q[shift] = c;
            r = self.trim(r);
        }
        (self.trim(q), r)
    }

    pub fn rem(&self, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &[F::Elem]) -> Poly<F::Elem> {
        match self.degree(a) {
            None => Vec::new(),
            Some(d) => {
                let li = self.field.inv(&a[d]).expect("nonzero lead");
                self.scale(a, &li)
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
        let mut x = self.trim(a.to_vec());
        let mut y = self.trim(b.to_vec());
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = std::mem::replace(&mut y, r);
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `s·a + t·b = g`, `g` the monic gcd.
    pub fn ext_gcd(
        &self,
        a: &[F::Elem],
        b: &[F::Elem],
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let one = vec![self.field.one()];
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        let (mut s0, mut s1) = (one.clone(), Vec::new());
        let (mut t0, mut t1) = (Vec::new(), one);
        while !r1.is_empty() {
            let (q, r2) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r2);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match self.degree(&r0) {
            None => (r0, s0, t0),
            Some(d) => {
                let li = self.field.inv(&r0[d]).expect("nonzero lead");
                (self.scale(&r0, &li), self.scale(&s0, &li), self.scale(&t0, &li))
            }
        }
    }

    pub fn derivative(&self, a: &[F::Elem]) -> Poly<F::Elem> {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.field.mul(c, &self.field.from_int(i as i64)))
                .collect(),
        )
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, a: &[F::Elem], x: &F::Elem) -> F::Elem {
        a.iter()
            .rev()
            .fold(self.field.zero(), |acc, c| self.field.add(&self.field.mul(&acc, x), c))
    }
}
