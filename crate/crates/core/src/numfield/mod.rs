//! Number fields `ℚ[t]/(f)` with certified irreducible `f`.

pub mod irreducible;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactalg::field::format_rational;
use crate::exactalg::{Field, Rational, RationalField};
pub use irreducible::{IrreducibilityConfig, PatternReport};
pub use poly::{Poly, PolyRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumberFieldError {
    #[error("minimal polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("minimal polynomial is not squarefree")]
    NotSquarefree,
    #[error("minimal polynomial is reducible over Q (rational root {0})")]
    Reducible(String),
    #[error("irreducibility of the minimal polynomial could not be certified after {0} primes; input rejected")]
    IrreducibilityUnverified(usize),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    /// Monic, constant term first, length `degree + 1`.
    min_poly: Vec<Rational>,
}

/// `ℚ[t]/(f)`. Cheap to clone; immutable.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberField {
    inner: Arc<Inner>,
}

/// Coordinates of an element in the power basis `1, θ, …, θ^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NfElement {
    coeffs: Vec<Rational>,
}

impl NfElement {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.min_poly_string("t"))
    }
}

impl NumberField {
    /// Certifies and builds `ℚ[t]/(f)` with the default prime budget.
    pub fn new(min_poly: Vec<Rational>) -> Result<Self, NumberFieldError> {
        Self::with_config(min_poly, &IrreducibilityConfig::default())
    }

    pub fn with_config(min_poly: Vec<Rational>, cfg: &IrreducibilityConfig) -> Result<Self, NumberFieldError> {
        let ring = PolyRing::new(RationalField);
        let f = ring.trim(min_poly);
        match f.last() {
            Some(l) if l.is_one() && f.len() >= 2 => {}
            _ => return Err(NumberFieldError::NotMonic),
        }
        if ring.gcd(&f, &ring.derivative(&f)).len() != 1 {
            return Err(NumberFieldError::NotSquarefree);
        }
        if f.len() > 2 {
            if let Some(r) = irreducible::rational_root(&f) {
                return Err(NumberFieldError::Reducible(format_rational(&r)));
            }
            let report = irreducible::certify_by_patterns(&f, cfg);
            if !report.certified {
                return Err(NumberFieldError::IrreducibilityUnverified(report.patterns.len()));
            }
        }
        Ok(Self { inner: Arc::new(Inner { min_poly: f }) })
    }

    /// ℚ itself, presented as `ℚ[t]/(t)`.
    pub fn rationals() -> Self {
        Self { inner: Arc::new(Inner { min_poly: vec![Rational::zero(), Rational::one()] }) }
    }

    pub fn degree(&self) -> usize {
        self.inner.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[Rational] {
        &self.inner.min_poly
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    /// Human-readable minimal polynomial in the given variable name.
    pub fn min_poly_string(&self, var: &str) -> String {
        crate::parse::format_univariate(&self.inner.min_poly, var)
    }

    /// The generator `θ`, the class of `t`.
    pub fn theta(&self) -> NfElement {
        self.element(&[Rational::zero(), Rational::one()])
    }

    /// Element from power-basis coordinates, reducing modulo `f` when more
    /// than `degree` coordinates are given.
    pub fn element(&self, coeffs: &[Rational]) -> NfElement {
        let ring = PolyRing::new(RationalField);
        let mut c = ring.rem(coeffs, &self.inner.min_poly);
        c.resize(self.degree(), Rational::zero());
        NfElement { coeffs: c }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> NfElement {
        let c: Vec<Rational> = coeffs.iter().map(|&x| Rational::from_integer(x.into())).collect();
        self.element(&c)
    }

    /// `a⁻¹` via extended Euclid on `(a, f)`.
    pub fn try_inv(&self, a: &NfElement) -> Result<NfElement, NumberFieldError> {
        self.inv(a).ok_or(NumberFieldError::DivisionByZero)
    }

    /// Evaluates a rational polynomial at an element.
    pub fn eval_poly(&self, p: &[Rational], x: &NfElement) -> NfElement {
        p.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), &self.from_rational(c)))
    }

    /// Dimension over ℚ of the subalgebra generated by `gens`.
    pub fn subalgebra_degree(&self, gens: &[NfElement]) -> usize {
        self.subalgebra_basis(gens).len()
    }

    /// Reduced row-echelon ℚ-basis (as coordinate vectors) of the subalgebra
    /// generated by `gens`, grown from `1` by multiplying by generators until
    /// the span stops changing.
    pub fn subalgebra_basis(&self, gens: &[NfElement]) -> Vec<Vec<Rational>> {
        let n = self.degree();
        let mut span: Vec<Vec<Rational>> = vec![self.one().coeffs];
        loop {
            let mut candidates = span.clone();
            for b in &span {
                let be = NfElement { coeffs: b.clone() };
                for g in gens {
                    candidates.push(self.mul(&be, g).coeffs);
                }
            }
            let next = row_space_rref(n, candidates);
            if next.len() == span.len() {
                return next;
            }
            span = next;
        }
    }
}

/// Reduced row-echelon basis of the row space.
fn row_space_rref(cols: usize, rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut a = rows;
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

impl Field for NumberField {
    type Elem = NfElement;

    fn zero(&self) -> NfElement {
        NfElement { coeffs: vec![Rational::zero(); self.degree()] }
    }
    fn one(&self) -> NfElement {
        let mut c = vec![Rational::zero(); self.degree()];
        c[0] = Rational::one();
        NfElement { coeffs: c }
    }
    fn is_zero(&self, a: &NfElement) -> bool {
        a.coeffs.iter().all(Zero::is_zero)
    }
    fn add(&self, a: &NfElement, b: &NfElement) -> NfElement {
        NfElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }
    fn sub(&self, a: &NfElement, b: &NfElement) -> NfElement {
        NfElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }
    fn neg(&self, a: &NfElement) -> NfElement {
        NfElement { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }
    fn mul(&self, a: &NfElement, b: &NfElement) -> NfElement {
        let n = self.degree();
        if n == 1 {
            return NfElement { coeffs: vec![&a.coeffs[0] * &b.coeffs[0]] };
        }
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let f = &self.inner.min_poly;
        for k in (n..2 * n - 1).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                if !f[i].is_zero() {
                    prod[k - n + i] -= &c * &f[i];
                }
            }
        }
        prod.truncate(n);
        NfElement { coeffs: prod }
    }
    fn inv(&self, a: &NfElement) -> Option<NfElement> {
        if self.is_zero(a) {
            return None;
        }
        let ring = PolyRing::new(RationalField);
        let rep = ring.trim(a.coeffs.clone());
        let (g, s, _) = ring.ext_gcd(&rep, &self.inner.min_poly);
        debug_assert_eq!(g.len(), 1, "f irreducible, so gcd is 1");
        Some(self.element(&s))
    }
    fn from_rational(&self, q: &Rational) -> NfElement {
        let mut c = vec![Rational::zero(); self.degree()];
        c[0] = q.clone();
        NfElement { coeffs: c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn q(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| rat(c, 1)).collect()
    }

    #[test]
    fn quadratic_field() {
        let k = NumberField::new(q(&[-2, 0, 1])).unwrap();
        assert_eq!(k.degree(), 2);
        let th = k.theta();
        assert_eq!(k.mul(&th, &th), k.from_int(2));
    }

    #[test]
    fn reducible_quadratic_is_rejected() {
        assert!(matches!(NumberField::new(q(&[-1, 0, 1])), Err(NumberFieldError::Reducible(_))));
        assert_eq!(NumberField::new(q(&[1, 2, 1])), Err(NumberFieldError::NotSquarefree));
        assert_eq!(NumberField::new(q(&[1, 2])), Err(NumberFieldError::NotMonic));
        assert_eq!(NumberField::new(vec![]), Err(NumberFieldError::NotMonic));
    }

    #[test]
    fn quartic_split_everywhere_is_unverified() {
        // t^4 + 1 is irreducible but splits mod every prime: the pattern
        // certificate is inconclusive and the input must be rejected.
        assert!(matches!(
            NumberField::new(q(&[1, 0, 0, 0, 1])),
            Err(NumberFieldError::IrreducibilityUnverified(25))
        ));
    }

    #[test]
    fn cubic_field() {
        let k = NumberField::new(q(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(k.degree(), 3);
        assert!(k.is_zero(&k.eval_poly(k.min_poly(), &k.theta())));
    }

    #[test]
    fn inverse_examples() {
        let k = NumberField::new(q(&[-2, 0, 1])).unwrap();
        assert_eq!(k.try_inv(&k.one()).unwrap(), k.one());
        let a = k.from_ints(&[1, 1]);
        assert_eq!(k.try_inv(&a).unwrap(), k.from_ints(&[-1, 1]));
        assert_eq!(k.try_inv(&k.zero()), Err(NumberFieldError::DivisionByZero));
    }

    #[test]
    fn subalgebra_examples() {
        let k2 = NumberField::new(q(&[-2, 0, 1])).unwrap();
        assert_eq!(k2.subalgebra_degree(&[]), 1);
        assert_eq!(k2.subalgebra_degree(&[k2.theta()]), 2);
        let k3 = NumberField::new(q(&[-2, 0, 0, 1])).unwrap();
        let th2 = k3.mul(&k3.theta(), &k3.theta());
        // Oracle: 1, θ², θ⁴ = 2θ already span ℚ³.
        let th4 = k3.mul(&th2, &th2);
        assert_eq!(th4, k3.from_ints(&[0, 2, 0]));
        assert_eq!(k3.subalgebra_degree(&[th2]), 3);
        assert_eq!(k3.subalgebra_degree(&[k3.from_int(5)]), 1);
    }

    #[test]
    fn subalgebra_of_quartic_can_be_proper() {
        // ℚ(θ) with θ⁴ = 2 contains ℚ(θ²) = ℚ(√2) of degree 2.
        let k = NumberField::new(q(&[-2, 0, 0, 0, 1])).unwrap();
        let th2 = k.mul(&k.theta(), &k.theta());
        assert_eq!(k.subalgebra_degree(&[th2.clone()]), 2);
        assert_eq!(k.subalgebra_degree(&[th2, k.theta()]), 4);
    }
}
