//! Common-component test for plane forms.
//!
//! A homogeneous gcd `G = x2^k·G'` with `x2 ∤ G'` dehomogenizes to `G'(x0, x1, 1)`
//! of the same degree as `G'`, so the forms share a component iff both are
//! divisible by `x2` or their dehomogenizations have a nonconstant gcd. The
//! latter is decided in `(F[x1])[x0]` by a primitive pseudo-remainder
//! sequence.

use super::form::Form;
use crate::exactalg::Field;
use crate::numfield::{Poly, PolyRing};

/// Polynomial in `x0` whose coefficients are polynomials in `x1`.
type BiPoly<T> = Vec<Poly<T>>;

struct Bivariate<F: Field> {
    ring: PolyRing<F>,
}

impl<F: Field> Bivariate<F> {
    fn trim(&self, mut a: BiPoly<F::Elem>) -> BiPoly<F::Elem> {
        while a.last().is_some_and(|c| c.is_empty()) {
            a.pop();
        }
        a
    }

    fn dehomogenize(&self, f: &Form<F::Elem>) -> BiPoly<F::Elem> {
        let field = &self.ring.field;
        let mut out: BiPoly<F::Elem> = vec![Vec::new(); f.degree() as usize + 1];
        for (e, c) in f.terms(field) {
            let slot = &mut out[e[0] as usize];
            if slot.len() <= e[1] as usize {
                slot.resize(e[1] as usize + 1, field.zero());
            }
            slot[e[1] as usize] = field.add(&slot[e[1] as usize], c);
        }
        let out = out.into_iter().map(|p| self.ring.trim(p)).collect();
        self.trim(out)
    }

    fn content(&self, a: &BiPoly<F::Elem>) -> Poly<F::Elem> {
        a.iter().fold(Vec::new(), |g, c| self.ring.gcd(&g, c))
    }

    fn primitive_part(&self, a: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
        let c = self.content(a);
        a.iter().map(|x| self.ring.divrem(x, &c).0).collect()
    }

    fn prem(&self, a: &BiPoly<F::Elem>, b: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
        let db = b.len() - 1;
        let lc = &b[db];
        let mut r = a.clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            let shift = dr - db;
            for x in r.iter_mut() {
                *x = self.ring.mul(x, lc);
            }
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] = self.ring.sub(&r[shift + i], &self.ring.mul(&lr, bi));
            }
            r = self.trim(r);
        }
        r
    }

    /// Whether `gcd(a, b)` is nonconstant; both inputs nonzero.
    fn nontrivial_gcd(&self, a: BiPoly<F::Elem>, b: BiPoly<F::Elem>) -> bool {
        let shared = self.ring.gcd(&self.content(&a), &self.content(&b));
        if self.ring.degree(&shared).is_some_and(|d| d > 0) {
            return true;
        }
        let (mut p, mut q) = (self.primitive_part(&a), self.primitive_part(&b));
        if p.len() < q.len() {
            std::mem::swap(&mut p, &mut q);
        }
        loop {
            if q.len() <= 1 {
                // q is primitive of x0-degree 0, hence a unit.
                return false;
            }
            let r = self.prem(&p, &q);
            if r.is_empty() {
                return true;
            }
            p = q;
            q = self.primitive_part(&r);
        }
    }
}

/// True iff the two forms have a common factor of positive degree.
pub fn common_component<F: Field>(field: &F, d: &Form<F::Elem>, c: &Form<F::Elem>) -> bool {
    if d.divisible_by_coordinate(field, 2) && c.divisible_by_coordinate(field, 2) {
        return true;
    }
    let bi = Bivariate { ring: PolyRing::new(field.clone()) };
    let a = bi.dehomogenize(d);
    let b = bi.dehomogenize(c);
    bi.nontrivial_gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RationalField;

    fn f(s: &str) -> Form<crate::Rational> {
        Form::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        let q = RationalField;
        assert!(common_component(&q, &f("x0*x1"), &f("x1*x2")));
        assert!(!common_component(&q, &f("x0"), &f("x1")));
        // The conic has no rational linear factor, and x0 - x1 is not one of
        // its factors over ℚ(√2) either.
        assert!(!common_component(&q, &f("x0^2-2*x1^2"), &f("x0-x1")));
        assert!(common_component(&q, &f("x2"), &f("x2^2")));
        assert!(common_component(&q, &f("x2*x0"), &f("x2*x1")));
        assert!(!common_component(&q, &f("x2"), &f("x0")));
    }

    #[test]
    fn shared_factor_is_found() {
        let q = RationalField;
        let g = f("x0^2+x1*x2-3*x2^2");
        let a = g.mul(&q, &f("x0-7*x1+x2"));
        let b = g.mul(&q, &f("x1^2+x0*x2"));
        assert!(common_component(&q, &a, &b));
        assert!(!common_component(&q, &f("x0-7*x1+x2"), &f("x1^2+x0*x2")));
    }

    #[test]
    fn factor_without_x0() {
        let q = RationalField;
        let a = f("x1-x2").mul(&q, &f("x0"));
        let b = f("x1-x2").mul(&q, &f("x0+x1"));
        assert!(common_component(&q, &a, &b));
        assert!(!common_component(&q, &f("x1-x2"), &f("x1+x2")));
    }
}
