//! Fat-point linear systems on the plane.
//!
//! Forms of degree `e` are coefficient vectors over [`monomials`]`(e)`. The
//! condition "order ≥ m at x" is imposed through the divided (Hasse)
//! derivatives `∂_u^(s) ∂_v^(t)`, `s + t < m`, of the dehomogenized form in the
//! point's affine chart. Each such derivative evaluates to an element of the
//! residue field `k(x)`, which is expanded over a ℚ-basis of `k(x)` into `α`
//! rational rows: `α·m(m+1)/2` rows in all.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::modular;
use crate::exactalg::{kernel_basis, rank, Field, Matrix, Rational, RationalField};
use crate::p2geom::{h0_count, monomials, same_closed_point, ClosedPoint, Form};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinsysError {
    #[error("fat point specs {0} and {1} are the same closed point")]
    DuplicatePoint(usize, usize),
}

/// `h⁰(ℙ², O(d)) = (d+1)(d+2)/2`.
pub fn h0(d: u64) -> u64 {
    (d + 1) * (d + 2) / 2
}

/// Riemann–Roch on the plane: `χ(O(d)) = 1 + d(d+3)/2`.
pub fn chi_rr(d: i64) -> i64 {
    1 + d * (d + 3) / 2
}

/// Number of rational conditions a fat point of order `m` and residue degree
/// `alpha` imposes.
pub fn fat_point_conditions(alpha: u64, m: u64) -> u64 {
    alpha * m * (m + 1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointSpec {
    pub point: ClosedPoint,
    /// Required vanishing order, at least one.
    pub order: u32,
}

/// One row of a [`MultTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultEntry {
    /// Degree of the forms.
    pub e: u32,
    /// Largest order `m ≤ e` with a nonzero form of degree `e` vanishing to
    /// order `m`, or zero.
    pub m_max: u32,
    /// Dimension of that space of forms.
    pub kernel_dim: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultTable {
    pub entries: Vec<MultEntry>,
}

impl MultTable {
    /// `m_max(e) ≤ e` and nondecreasing in `e`.
    pub fn is_consistent(&self) -> bool {
        self.entries.iter().all(|r| r.m_max <= r.e) && self.entries.windows(2).all(|w| w[0].m_max <= w[1].m_max)
    }

    pub fn get(&self, e: u32) -> Option<&MultEntry> {
        self.entries.iter().find(|r| r.e == e)
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Hasse-derivative rows over a single field, one per `(s, t)` with
/// `s + t < m`, ordered by `s + t` and then by decreasing `s`.
///
/// `affine` are the two non-chart coordinates of a point whose chart
/// coordinate is one.
pub fn hasse_rows<F: Field>(field: &F, e: u32, chart: usize, affine: [&F::Elem; 2], m: u32) -> Vec<Vec<F::Elem>> {
    let mons: Vec<[u32; 2]> = monomials(e)
        .into_iter()
        .map(|x| {
            let mut it = (0..3).filter(|&i| i != chart).map(|i| x[i]);
            [it.next().expect("two"), it.next().expect("two")]
        })
        .collect();
    let powers: Vec<Vec<F::Elem>> = affine
        .iter()
        .map(|c| {
            let mut p = vec![field.one()];
            for k in 1..=e as usize {
                p.push(field.mul(&p[k - 1], c));
            }
            p
        })
        .collect();
    let mut rows = Vec::new();
    for total in 0..m {
        for s in (0..=total).rev() {
            let t = total - s;
            let row = mons
                .iter()
                .map(|&[a, b]| {
                    let c = binomial(a, s) * binomial(b, t);
                    if c == 0 {
                        field.zero()
                    } else {
                        let v = field.mul(&powers[0][(a - s) as usize], &powers[1][(b - t) as usize]);
                        field.mul(&v, &field.from_int(c))
                    }
                })
                .collect();
            rows.push(row);
        }
    }
    rows
}

/// Rational condition rows for "order ≥ m at x" on forms of degree `e`.
pub fn evaluation_rows_rational(x: &ClosedPoint, e: u32, m: u32) -> Vec<Vec<Rational>> {
    let k = x.field();
    let [u, v] = x.affine_coords();
    let krows = hasse_rows(k, e, x.chart(), [&u, &v], m);
    let alpha = x.residue_degree();
    let mut out = Vec::with_capacity(krows.len() * alpha);
    for row in krows {
        let coords: Vec<Vec<Rational>> = row.iter().map(|a| x.residue_coordinates(a)).collect();
        for j in 0..alpha {
            out.push(coords.iter().map(|c| c[j].clone()).collect());
        }
    }
    out
}

/// Conditions matrix for several fat points on forms of degree `d`, with
/// `h0(d)` columns in graded-lex order and `Σ αᵢ·mᵢ(mᵢ+1)/2` rows. A form
/// vanishes to order `≥ mᵢ` at every `xᵢ` iff its coefficient vector is in
/// the kernel. Redundant rows are kept.
pub fn conditions_matrix(d: u32, specs: &[FatPointSpec]) -> Result<Matrix<Rational>, LinsysError> {
    for i in 0..specs.len() {
        for j in i + 1..specs.len() {
            if same_closed_point(&specs[i].point, &specs[j].point) {
                return Err(LinsysError::DuplicatePoint(i, j));
            }
        }
    }
    let rows = specs.iter().flat_map(|s| evaluation_rows_rational(&s.point, d, s.order)).collect();
    Ok(Matrix::from_rows(h0_count(d), rows))
}

/// Conditions matrix over a coefficient field `K` at a `K`-rational point:
/// one row per derivative condition.
pub fn conditions_matrix_over<F: Field>(field: &F, d: u32, x: &[F::Elem; 3], m: u32) -> Matrix<F::Elem> {
    let (chart, coords) = normalize_coords(field, x);
    let aff: Vec<&F::Elem> = (0..3).filter(|&i| i != chart).map(|i| &coords[i]).collect();
    Matrix::from_rows(h0_count(d), hasse_rows(field, d, chart, [aff[0], aff[1]], m))
}

/// Chart index and coordinates rescaled so that the chart coordinate is one.
pub fn normalize_coords<F: Field>(field: &F, x: &[F::Elem; 3]) -> (usize, [F::Elem; 3]) {
    let chart = x.iter().position(|c| !field.is_zero(c)).expect("point has a nonzero coordinate");
    let inv = field.inv(&x[chart]).expect("nonzero");
    (chart, x.clone().map(|c| field.mul(&c, &inv)))
}

/// Largest `m ≤ e` with `h0(e) > α·m(m+1)/2`: a nonzero form of order `≥ m`
/// exists by counting alone.
fn forced_order(alpha: u64, e: u32) -> u32 {
    let h = h0(e as u64);
    (0..=e).rev().find(|&m| h > fat_point_conditions(alpha, m as u64)).unwrap_or(0)
}

/// One table row for a closed point over ℚ.
pub fn mult_entry(x: &ClosedPoint, e: u32) -> MultEntry {
    let alpha = x.residue_degree() as u64;
    let rows = evaluation_rows_rational(x, e, e);
    let cols = h0_count(e);
    let top = |m: u32| Matrix::from_rows(cols, rows[..fat_point_conditions(alpha, m as u64) as usize].to_vec());
    let mut m = forced_order(alpha, e);
    while m < e && modular::has_kernel(&top(m + 1)) {
        m += 1;
    }
    let kernel_dim = if m == 0 { cols as u64 } else { modular::kernel_dim(&top(m)) as u64 };
    MultEntry { e, m_max: m, kernel_dim }
}

/// Canonical first kernel vector at order `m` on degree-`e` forms, as a form.
pub fn witness(x: &ClosedPoint, e: u32, m: u32) -> Option<Form<Rational>> {
    let alpha = x.residue_degree() as u64;
    let rows = evaluation_rows_rational(x, e, m);
    debug_assert_eq!(rows.len() as u64, fat_point_conditions(alpha, m as u64));
    let mat = Matrix::from_rows(h0_count(e), rows);
    let v = modular::first_kernel_vector(&mat)?;
    Some(Form::new(&RationalField, e, v).expect("kernel vectors are nonzero"))
}

/// `(m_max, witness)` for degree-`d` forms at `x`; the witness is the first
/// canonical kernel vector at `m_max`, absent when `m_max = 0`.
pub fn max_mult(d: u32, x: &ClosedPoint) -> (u32, Option<Form<Rational>>) {
    let entry = mult_entry(x, d);
    if entry.m_max == 0 {
        return (0, None);
    }
    (entry.m_max, witness(x, d, entry.m_max))
}

/// Table rows for `e = 1..=max_e`, computed in parallel.
pub fn mult_table(x: &ClosedPoint, max_e: u32) -> MultTable {
    let entries = (1..=max_e).into_par_iter().map(|e| mult_entry(x, e)).collect();
    MultTable { entries }
}

/// Table row for a point rational over the coefficient field `K`, with
/// forms over `K`; exact elimination over `K`.
pub fn mult_entry_over<F: Field>(field: &F, x: &[F::Elem; 3], e: u32) -> MultEntry {
    let full = conditions_matrix_over(field, e, x, e);
    let cols = full.cols();
    let top = |m: u32| full.top_rows(fat_point_conditions(1, m as u64) as usize);
    let mut m = forced_order(1, e);
    while m < e && rank(field, &top(m + 1)) < cols {
        m += 1;
    }
    let kernel_dim = (cols - if m == 0 { 0 } else { rank(field, &top(m)) }) as u64;
    MultEntry { e, m_max: m, kernel_dim }
}

pub fn mult_table_over<F: Field>(field: &F, x: &[F::Elem; 3], max_e: u32) -> MultTable {
    let entries = (1..=max_e).into_par_iter().map(|e| mult_entry_over(field, x, e)).collect();
    MultTable { entries }
}

/// First canonical kernel vector over `K` as a `K`-form.
pub fn witness_over<F: Field>(field: &F, x: &[F::Elem; 3], e: u32, m: u32) -> Option<Form<F::Elem>> {
    let mat = conditions_matrix_over(field, e, x, m);
    let v = kernel_basis(field, &mat).into_iter().next()?;
    Some(Form::new(field, e, v).expect("kernel vectors are nonzero"))
}

/// `α·m(m+1)/2` as an exact rational, for reports.
pub fn conditions_rational(alpha: u64, m: u64) -> Rational {
    Rational::from_integer(BigInt::from(fat_point_conditions(alpha, m)))
}
