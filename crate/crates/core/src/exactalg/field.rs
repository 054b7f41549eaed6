//! The exact-field abstraction shared by every linear-algebra routine.
//!
//! A [`Field`] value is a *context*: it knows how to combine its elements but
//! the elements themselves carry no back-reference. This lets a matrix over
//! `ℚ(θ)` be a plain `Matrix<NfElement>` while the same elimination code runs
//! over `ℚ` with [`RationalField`].

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision exact rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of a rational under the structure map `ℚ → F`.
    fn from_rational(&self, q: &Rational) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Puts a vector into the canonical representative of its projective
    /// class. The default scales the first nonzero entry to one.
    fn normalize(&self, v: &mut [Self::Elem]) {
        if let Some(lead) = v.iter().find(|a| !self.is_zero(a)).cloned() {
            let li = self.inv(&lead).expect("nonzero lead");
            for a in v.iter_mut() {
                *a = self.mul(a, &li);
            }
        }
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }

    /// Clears denominators, divides by the integer content and makes the
    /// first nonzero entry positive.
    fn normalize(&self, v: &mut [Rational]) {
        normalize_rational_vector(v);
    }
}

/// In-place content normalization of a rational vector: integer entries with
/// gcd one and a positive leading entry. The zero vector is left alone.
pub fn normalize_rational_vector(v: &mut [Rational]) {
    let Some(lead) = v.iter().find(|a| !a.is_zero()) else {
        return;
    };
    let negative = lead.is_negative();
    let den = v
        .iter()
        .filter(|a| !a.is_zero())
        .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let ints: Vec<BigInt> = v.iter().map(|a| (a * &den).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    for (slot, n) in v.iter_mut().zip(ints) {
        let mut q = n / &content;
        if negative {
            q = -q;
        }
        *slot = Rational::from_integer(q);
    }
}

/// Parses `"p/q"` or `"n"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Formats a rational as `"p/q"`, or `"n"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Shorthand for building small rationals in tests and examples.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
