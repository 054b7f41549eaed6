//! Closed points of the projective plane over ℚ, plane forms, multiplicities
//! weighted by residue degree, and intersection numbers.
//!
//! A closed point of residue degree `α` is stored through one geometric
//! representative with coordinates in a number field `K ⊇ k(x)`. Its
//! `k`-multiplicity on a curve `F = 0` is `α · l`, where `l` is the vanishing
//! order of `F` at the representative; since `F` has rational coefficients
//! the order is the same at every conjugate.

pub mod form;
pub mod gcd;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactalg::{Field, Rational};
use crate::numfield::{NfElement, NumberField};
pub use form::{h0_count, monomial_index, monomials, Form, FormError};
pub use gcd::common_component;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum P2Error {
    #[error("all three coordinates are zero")]
    AllCoordsZero,
    #[error("the curves share a common component")]
    CommonComponent,
}

/// The line bundle `O(d)` on the plane, recorded by its degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineBundleDeg(pub u64);

impl LineBundleDeg {
    pub fn degree(self) -> u64 {
        self.0
    }

    /// Self-intersection `d²`.
    pub fn self_intersection(self) -> Rational {
        Rational::from_integer(BigInt::from(self.0 * self.0))
    }
}

/// A closed point of `ℙ²_ℚ` given by homogeneous coordinates in a number
/// field, normalized so that the first nonzero coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedPoint {
    field: NumberField,
    coords: [NfElement; 3],
    chart: usize,
    residue_degree: usize,
    /// Reduced echelon ℚ-basis of `k(x)` inside the coordinate field and its
    /// pivot positions; coordinates of an element of `k(x)` in this basis
    /// are its entries at the pivots.
    residue_pivots: Vec<usize>,
}

impl ClosedPoint {
    /// Normalizes the coordinates and computes the residue degree as the
    /// degree of the algebra generated by the two affine coordinates.
    pub fn new(field: &NumberField, coords: [NfElement; 3]) -> Result<Self, P2Error> {
        let chart = coords.iter().position(|c| !field.is_zero(c)).ok_or(P2Error::AllCoordsZero)?;
        let inv = field.inv(&coords[chart]).expect("chart coordinate is nonzero");
        let coords = coords.map(|c| field.mul(&c, &inv));
        let affine: Vec<NfElement> = (0..3).filter(|&i| i != chart).map(|i| coords[i].clone()).collect();
        let basis = field.subalgebra_basis(&affine);
        let residue_pivots = basis
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).expect("basis rows are nonzero"))
            .collect::<Vec<_>>();
        Ok(Self { field: field.clone(), residue_degree: basis.len(), coords, chart, residue_pivots })
    }

    /// A ℚ-rational point from rational coordinates.
    pub fn rational(coords: [Rational; 3]) -> Result<Self, P2Error> {
        let q = NumberField::rationals();
        let c = coords.map(|x| q.from_rational(&x));
        Self::new(&q, c)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[NfElement; 3] {
        &self.coords
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    /// `α = [k(x) : ℚ]`.
    pub fn residue_degree(&self) -> usize {
        self.residue_degree
    }

    /// The two affine coordinates in the point's chart, in index order.
    pub fn affine_coords(&self) -> [NfElement; 2] {
        let mut it = (0..3).filter(|&i| i != self.chart).map(|i| self.coords[i].clone());
        [it.next().expect("two"), it.next().expect("two")]
    }

    /// Coordinates over ℚ of an element of the residue field `k(x)`.
    pub fn residue_coordinates(&self, a: &NfElement) -> Vec<Rational> {
        self.residue_pivots.iter().map(|&p| a.coeffs()[p].clone()).collect()
    }
}

/// Vanishing order of a form at a point with coordinates in the form's own
/// field: the least `k` such that some homogeneous partial derivative of
/// order `k` is nonzero at the point.
pub fn vanishing_order_in<F: Field>(field: &F, form: &Form<F::Elem>, x: &[F::Elem; 3]) -> u32 {
    let e = form.degree();
    let powers: Vec<Vec<F::Elem>> = x
        .iter()
        .map(|c| {
            let mut p = vec![field.one()];
            for k in 1..=e as usize {
                p.push(field.mul(&p[k - 1], c));
            }
            p
        })
        .collect();
    let falling = |n: u32, k: u32| -> i64 { (0..k).map(|t| (n - t) as i64).product() };
    for order in 0..=e {
        for a in 0..=order {
            for b in 0..=order - a {
                let c = order - a - b;
                let mut acc = field.zero();
                for (exp, coeff) in form.terms(field) {
                    if exp[0] < a || exp[1] < b || exp[2] < c {
                        continue;
                    }
                    let k = falling(exp[0], a) * falling(exp[1], b) * falling(exp[2], c);
                    let m = field.mul(
                        &field.mul(&powers[0][(exp[0] - a) as usize], &powers[1][(exp[1] - b) as usize]),
                        &powers[2][(exp[2] - c) as usize],
                    );
                    acc = field.add(&acc, &field.mul(&field.mul(coeff, &field.from_int(k)), &m));
                }
                if !field.is_zero(&acc) {
                    return order;
                }
            }
        }
    }
    // A nonzero form of degree e has a nonzero e-th derivative.
    unreachable!("nonzero form with all derivatives vanishing")
}

/// Largest `l` with `F ∈ m_x^l`, via derivatives at the stored representative.
pub fn vanishing_order(form: &Form<Rational>, x: &ClosedPoint) -> u32 {
    let k = x.field();
    let f = form.embed(k, |c| k.from_rational(c));
    vanishing_order_in(k, &f, x.coords())
}

/// `mult_{x/k} F = α · l`.
pub fn mult_point(form: &Form<Rational>, x: &ClosedPoint) -> u64 {
    x.residue_degree() as u64 * vanishing_order(form, x) as u64
}

/// `O(d) ·_k C = d · deg C`.
pub fn intersection_number(l: LineBundleDeg, c: &Form<Rational>) -> Rational {
    Rational::from_integer(BigInt::from(l.0) * BigInt::from(c.degree()))
}

/// Checks `deg D · deg C ≥ (1/α) · mult_{x/k}D · mult_{x/k}C`.
pub fn bezout_verify(d: &Form<Rational>, c: &Form<Rational>, x: &ClosedPoint) -> Result<bool, P2Error> {
    if common_component(&crate::exactalg::RationalField, d, c) {
        return Err(P2Error::CommonComponent);
    }
    let alpha = x.residue_degree() as u64;
    let lhs = alpha * d.degree() as u64 * c.degree() as u64;
    Ok(lhs >= mult_point(d, x) * mult_point(c, x))
}

impl std::fmt::Display for ClosedPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|c| crate::parse::format_univariate(c.coeffs(), "th"))
            .collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

/// Whether two points over the same field are the same closed point, i.e.
/// their Galois orbits coincide. Tested by counting the conditions the two
/// orbits impose on forms of degree `α₁ + α₂ − 1`, a degree in which any
/// `α₁ + α₂` distinct geometric points impose independent conditions.
pub fn same_closed_point(x: &ClosedPoint, y: &ClosedPoint) -> bool {
    if x.field() != y.field() {
        return false;
    }
    if x.coords() == y.coords() {
        return true;
    }
    if x.residue_degree() != y.residue_degree() {
        return false;
    }
    let e = (x.residue_degree() + y.residue_degree() - 1) as u32;
    let rows: Vec<Vec<Rational>> = [x, y]
        .iter()
        .flat_map(|p| crate::linsys::evaluation_rows_rational(p, e, 1))
        .collect();
    let m = crate::exactalg::Matrix::from_rows(h0_count(e), rows);
    crate::exactalg::modular::kernel_dim(&m) != h0_count(e) - x.residue_degree() - y.residue_degree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn sqrt2() -> NumberField {
        NumberField::new(vec![rat(-2, 1), rat(0, 1), rat(1, 1)]).unwrap()
    }

    fn sqrt2_point() -> ClosedPoint {
        let k = sqrt2();
        ClosedPoint::new(&k, [k.theta(), k.one(), k.zero()]).unwrap()
    }

    #[test]
    fn make_point_examples() {
        let p = ClosedPoint::rational([rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap();
        assert_eq!(p.residue_degree(), 1);
        assert_eq!(p.chart(), 2);
        assert_eq!(sqrt2_point().residue_degree(), 2);
        let k3 = NumberField::new(vec![rat(-1, 1), rat(-1, 1), rat(0, 1), rat(1, 1)]).unwrap();
        let th = k3.theta();
        let th2 = k3.mul(&th, &th);
        let p3 = ClosedPoint::new(&k3, [th.clone(), th2, k3.one()]).unwrap();
        assert_eq!(p3.residue_degree(), 3);
        let q = NumberField::rationals();
        assert_eq!(ClosedPoint::new(&q, [q.zero(), q.zero(), q.zero()]), Err(P2Error::AllCoordsZero));
    }

    #[test]
    fn rational_point_in_a_bigger_field_has_degree_one() {
        let k = sqrt2();
        let p = ClosedPoint::new(&k, [k.from_int(2), k.from_int(4), k.zero()]).unwrap();
        assert_eq!(p.residue_degree(), 1);
        assert_eq!(p.coords()[1], k.from_int(2));
    }

    #[test]
    fn vanishing_order_examples() {
        let x = sqrt2_point();
        assert_eq!(vanishing_order(&Form::parse("x2").unwrap(), &x), 1);
        assert_eq!(vanishing_order(&Form::parse("x2^2").unwrap(), &x), 2);
        // F(x) = 0 and the gradient (2√2, −4, 0) is nonzero.
        assert_eq!(vanishing_order(&Form::parse("x0^2-2*x1^2").unwrap(), &x), 1);
        assert_eq!(vanishing_order(&Form::parse("x0").unwrap(), &x), 0);
    }

    #[test]
    fn mult_point_examples() {
        let o = ClosedPoint::rational([rat(1, 1), rat(0, 1), rat(0, 1)]).unwrap();
        assert_eq!(mult_point(&Form::parse("x1").unwrap(), &o), 1);
        let x = sqrt2_point();
        assert_eq!(mult_point(&Form::parse("x2").unwrap(), &x), 2);
        assert_eq!(mult_point(&Form::parse("x2^2").unwrap(), &x), 4);
    }

    #[test]
    fn intersection_number_examples() {
        let line = Form::parse("x0").unwrap();
        let conic = Form::parse("x0^2+x1*x2").unwrap();
        let quintic = Form::parse("x0^5+x2^5").unwrap();
        assert_eq!(intersection_number(LineBundleDeg(1), &line), rat(1, 1));
        assert_eq!(intersection_number(LineBundleDeg(3), &conic), rat(6, 1));
        assert_eq!(intersection_number(LineBundleDeg(2), &quintic), rat(10, 1));
    }

    #[test]
    fn bezout_examples() {
        let o = ClosedPoint::rational([rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap();
        assert_eq!(bezout_verify(&Form::parse("x0").unwrap(), &Form::parse("x1").unwrap(), &o), Ok(true));
        let x = sqrt2_point();
        let line = Form::parse("x2").unwrap();
        let conic = Form::parse("x0^2-2*x1^2").unwrap();
        assert_eq!(bezout_verify(&line, &conic, &x), Ok(true));
        assert_eq!(bezout_verify(&line, &line, &x), Err(P2Error::CommonComponent));
    }

    #[test]
    fn conjugate_representatives_are_the_same_closed_point() {
        let k = sqrt2();
        let x = sqrt2_point();
        let conj = ClosedPoint::new(&k, [k.neg(&k.theta()), k.one(), k.zero()]).unwrap();
        let other = ClosedPoint::new(&k, [k.from_ints(&[1, 1]), k.one(), k.zero()]).unwrap();
        assert!(same_closed_point(&x, &conj));
        assert!(!same_closed_point(&x, &other));
    }
}
