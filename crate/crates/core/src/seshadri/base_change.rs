//! Comparing Seshadri data of a point before and after extending the base
//! field.
//!
//! * A ℚ-rational point stays rational over any `K`; the evaluation matrices
//!   have rational entries, so their ranks (and with them the whole
//!   multiplicity table) cannot change. Both tables are computed
//!   independently and compared.
//! * A point of degree `α` over ℚ whose coordinates generate `K` becomes a
//!   `K`-rational point `y₀`. Its Seshadri constant over `K` can only go up;
//!   the report decides the inequality from the two brackets when possible.

use super::{seshadri_over, seshadri_p2, BracketParams, SeshadriError, SeshadriResult};
use crate::exactalg::{Field, Rational};
use crate::numfield::{NfElement, NumberField};
use crate::p2geom::ClosedPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseChangeCase {
    /// Rational point, arbitrary extension.
    RationalPoint,
    /// Point of higher degree, extension equal to its coordinate field.
    ResidueField,
}

/// How `ε_K` compares with `ε_ℚ` given the two certified brackets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inequality {
    /// Both exact and equal, or identical brackets from identical tables.
    Equal,
    /// `lower(ε_K) > upper(ε_ℚ)`.
    Strict,
    /// `lower(ε_K) ≥ upper(ε_ℚ)`.
    Holds,
    /// The brackets overlap; neither order is certified.
    Undetermined,
    /// `upper(ε_K) < lower(ε_ℚ)`: would contradict monotonicity under base change.
    Violated,
}

#[derive(Clone, Debug)]
pub struct BaseChangeReport {
    pub case: BaseChangeCase,
    pub over_q: SeshadriResult,
    pub over_k: SeshadriResult<NfElement>,
    /// Case (a) only: the two multiplicity tables coincide.
    pub tables_identical: Option<bool>,
    pub inequality: Inequality,
}

/// Default threshold at a rational point: `9·d₀/10`.
pub fn rational_point_gamma(params: &BracketParams) -> Rational {
    Rational::new(9.into(), 10.into()) * Rational::from_integer(params.bundle.degree().into())
}

fn compare(q: &SeshadriResult, k: &SeshadriResult<NfElement>) -> Inequality {
    if q.value == k.value {
        return Inequality::Equal;
    }
    if k.lower() > q.upper() {
        Inequality::Strict
    } else if k.lower() >= q.upper() {
        Inequality::Holds
    } else if k.upper() < q.lower() {
        Inequality::Violated
    } else {
        Inequality::Undetermined
    }
}

/// Runs both computations. For a rational point `params_k` defaults to
/// `params`. In the residue-field case the point becomes `K`-rational, where
/// the admissible range of `γ` grows to `(0, d₀)`; the default there is
/// [`rational_point_gamma`].
pub fn base_change_compare(
    x: &ClosedPoint,
    ext: &NumberField,
    params: &BracketParams,
    params_k: Option<&BracketParams>,
) -> Result<BaseChangeReport, SeshadriError> {
    let over_q = seshadri_p2(x, params)?;
    if x.residue_degree() == 1 {
        // Coordinates are rational once normalized.
        let coords: [NfElement; 3] = x.coords().clone().map(|c| ext.from_rational(&c.coeffs()[0]));
        debug_assert!(x.coords().iter().all(|c| c.coeffs()[1..].iter().all(|a| *a == Rational::default())));
        let over_k = seshadri_over(ext, &coords, params_k.unwrap_or(params))?;
        let tables_identical = over_q.table == over_k.table;
        let inequality = compare(&over_q, &over_k);
        return Ok(BaseChangeReport {
            case: BaseChangeCase::RationalPoint,
            over_q,
            over_k,
            tables_identical: Some(tables_identical),
            inequality,
        });
    }
    if ext != x.field() {
        return Err(SeshadriError::UnsupportedConfiguration(
            "for a point of degree > 1 the extension must be the coordinate field of the point".into(),
        ));
    }
    if x.residue_degree() != ext.degree() {
        return Err(SeshadriError::UnsupportedConfiguration(
            "the coordinates generate a proper subfield; relative extensions are not modeled".into(),
        ));
    }
    let default_k = BracketParams::new(rational_point_gamma(params), params.bundle);
    let over_k = seshadri_over(ext, x.coords(), params_k.unwrap_or(&default_k))?;
    let inequality = compare(&over_q, &over_k);
    Ok(BaseChangeReport { case: BaseChangeCase::ResidueField, over_q, over_k, tables_identical: None, inequality })
}
