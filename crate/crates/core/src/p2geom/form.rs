use num_traits::Zero;

use crate::exactalg::{Field, Rational, RationalField};
use crate::parse::{self, ParseError};

/// Exponent triples of degree `e` in graded-lex order with `x0 > x1 > x2`.
pub fn monomials(e: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(h0_count(e));
    for i in (0..=e).rev() {
        for j in (0..=e - i).rev() {
            out.push([i, j, e - i - j]);
        }
    }
    out
}

/// Number of monomials of degree `e` in three variables.
pub fn h0_count(e: u32) -> usize {
    let e = e as usize;
    (e + 1) * (e + 2) / 2
}

/// Position of an exponent triple in [`monomials`].
pub fn monomial_index(exp: [u32; 3]) -> usize {
    let e = exp[0] + exp[1] + exp[2];
    let i = exp[0];
    // Monomials with x0-exponent above i come first: sum over i' in (i, e] of (e - i' + 1).
    let before: u32 = (i + 1..=e).map(|k| e - k + 1).sum();
    (before + (e - i - exp[1])) as usize
}

/// Homogeneous form in `x0, x1, x2`; coefficients are dense over
/// [`monomials`] of its degree and never all zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form<T> {
    degree: u32,
    coeffs: Vec<T>,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("form has no nonzero coefficient")]
    Zero,
    #[error("forms must have degree at least 1")]
    DegreeZero,
    #[error("expected {expected} coefficients for a form of degree {degree}, got {got}")]
    WrongLength { degree: u32, expected: usize, got: usize },
    #[error("form literal is not homogeneous")]
    NotHomogeneous,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub const VARS: [&str; 3] = ["x0", "x1", "x2"];

impl<T> Form<T> {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: [u32; 3]) -> &T {
        &self.coeffs[monomial_index(exp)]
    }
}

impl<T: Clone + PartialEq> Form<T> {
    /// Builds and canonically normalizes a form (see [`Field::normalize`]).
    pub fn new<F: Field<Elem = T>>(field: &F, degree: u32, mut coeffs: Vec<T>) -> Result<Self, FormError> {
        if degree == 0 {
            return Err(FormError::DegreeZero);
        }
        let expected = h0_count(degree);
        if coeffs.len() != expected {
            return Err(FormError::WrongLength { degree, expected, got: coeffs.len() });
        }
        if coeffs.iter().all(|c| field.is_zero(c)) {
            return Err(FormError::Zero);
        }
        field.normalize(&mut coeffs);
        Ok(Self { degree, coeffs })
    }

    /// The coordinate form `x_i`.
    pub fn coordinate<F: Field<Elem = T>>(field: &F, i: usize) -> Self {
        let mut c = vec![field.zero(); 3];
        c[i] = field.one();
        Self { degree: 1, coeffs: c }
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms<'a, F: Field<Elem = T>>(&'a self, field: &'a F) -> impl Iterator<Item = ([u32; 3], &'a T)> + 'a {
        monomials(self.degree).into_iter().zip(&self.coeffs).filter(move |(_, c)| !field.is_zero(c))
    }

    pub fn mul<F: Field<Elem = T>>(&self, field: &F, other: &Self) -> Self {
        let deg = self.degree + other.degree;
        let mut out = vec![field.zero(); h0_count(deg)];
        for (ea, a) in self.terms(field) {
            for (eb, b) in other.terms(field) {
                let k = monomial_index([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]]);
                out[k] = field.add(&out[k], &field.mul(a, b));
            }
        }
        Self::new(field, deg, out).expect("product of nonzero forms is nonzero")
    }

    /// Image under a field embedding, renormalized in the target field.
    pub fn embed<G: Field>(&self, target: &G, f: impl Fn(&T) -> G::Elem) -> Form<G::Elem> {
        Form::new(target, self.degree, self.coeffs.iter().map(f).collect()).expect("embedding is injective")
    }

    /// Evaluates at a point whose coordinates live in the same field.
    pub fn eval<F: Field<Elem = T>>(&self, field: &F, x: &[T; 3]) -> T {
        self.terms(field).fold(field.zero(), |acc, (e, c)| {
            let m = field.mul(&field.mul(&field.pow(&x[0], e[0]), &field.pow(&x[1], e[1])), &field.pow(&x[2], e[2]));
            field.add(&acc, &field.mul(c, &m))
        })
    }

    /// Whether `x_i` divides the form.
    pub fn divisible_by_coordinate<F: Field<Elem = T>>(&self, field: &F, i: usize) -> bool {
        self.terms(field).all(|(e, _)| e[i] > 0)
    }
}

impl Form<Rational> {
    /// Parses the literal syntax `c*x0^i*x1^j*x2^l + …`.
    pub fn parse(s: &str) -> Result<Self, FormError> {
        let terms = parse::parse_sparse(s, &VARS)?;
        let Some(first) = terms.first() else {
            return Err(FormError::Zero);
        };
        let degree: u32 = first.1.iter().sum();
        if terms.iter().any(|(_, e)| e.iter().sum::<u32>() != degree) {
            return Err(FormError::NotHomogeneous);
        }
        let mut coeffs = vec![Rational::zero(); h0_count(degree)];
        for (c, e) in terms {
            coeffs[monomial_index([e[0], e[1], e[2]])] += c;
        }
        Self::new(&RationalField, degree, coeffs)
    }

    /// Inverse of [`Form::parse`], terms in graded-lex order.
    pub fn to_literal(&self) -> String {
        let terms: Vec<parse::Term> = monomials(self.degree)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (c.clone(), e.to_vec()))
            .collect();
        parse::format_sparse(&terms, &VARS)
    }
}
