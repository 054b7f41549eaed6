//! Parsing of field, point and rational flags.

use seshadri::exactalg::{parse_rational, Rational};
use seshadri::numfield::{NfElement, NumberField};
use seshadri::p2geom::ClosedPoint;
use seshadri::parse::parse_univariate;

use crate::error::{input, CliError, CliResult};

/// Variable of minimal polynomials on the command line.
pub const MINPOLY_VAR: &str = "t";
/// Name of the generator inside point coordinates.
pub const THETA: &str = "th";

pub fn rational(s: &str) -> CliResult<Rational> {
    parse_rational(s.trim()).ok_or_else(|| CliError::Input(format!("`{s}` is not a rational number")))
}

/// Minimal polynomial as dense coefficients, constant first.
pub fn minpoly_coeffs(s: &str) -> CliResult<Vec<Rational>> {
    parse_univariate(s, MINPOLY_VAR).map_err(|e| CliError::Input(format!("minpoly `{s}`: {e}")))
}

pub fn field(minpoly: Option<&str>) -> CliResult<NumberField> {
    match minpoly {
        None => Ok(NumberField::rationals()),
        Some(s) => NumberField::new(minpoly_coeffs(s)?).map_err(|e| CliError::Input(format!("minpoly `{s}`: {e}"))),
    }
}

/// One coordinate: a polynomial in `th` with rational coefficients.
pub fn coordinate(k: &NumberField, s: &str) -> CliResult<Vec<Rational>> {
    let c = parse_univariate(s, THETA).map_err(|e| CliError::Input(format!("coordinate `{s}`: {e}")))?;
    if k.is_rationals() && c.len() > 1 {
        return Err(CliError::Input(format!("coordinate `{s}` uses {THETA} but no --minpoly was given")));
    }
    Ok(k.element(&c).coeffs().to_vec())
}

/// Point spec `a,b,c`.
pub fn point_coords(k: &NumberField, s: &str) -> CliResult<[Vec<Rational>; 3]> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(CliError::Input(format!("point `{s}` must have three comma-separated coordinates")));
    };
    Ok([coordinate(k, a)?, coordinate(k, b)?, coordinate(k, c)?])
}

pub fn point_from_coeffs(k: &NumberField, c: &[Vec<Rational>; 3]) -> CliResult<ClosedPoint> {
    let coords: [NfElement; 3] = [k.element(&c[0]), k.element(&c[1]), k.element(&c[2])];
    ClosedPoint::new(k, coords).map_err(input)
}

/// Comma-separated integers, e.g. a lattice class `1,-1`.
pub fn int_list(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| CliError::Input(format!("`{p}` is not an integer in `{s}`"))))
        .collect()
}

pub fn index_list(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| CliError::Input(format!("`{p}` is not an index in `{s}`"))))
        .collect()
}

/// Matrix rows separated by `;`, entries by `,`.
pub fn int_matrix(s: &str) -> CliResult<Vec<Vec<i64>>> {
    s.split(';').map(int_list).collect()
}

