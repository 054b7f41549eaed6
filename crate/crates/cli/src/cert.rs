//! The certificate written by `p2 compute` and read back by `verify`.
//!
//! All rationals are `"p/q"` (or `"n"`) strings and polynomials are dense
//! coefficient lists, constant term first, so nothing is lost in transit.
//! The layout is documented in `schema/certificate.md`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use seshadri::exactalg::{format_rational, parse_rational, Rational};
use seshadri::linsys::{mult_table, witness, MultTable};
use seshadri::numfield::NumberField;
use seshadri::p2geom::{vanishing_order, ClosedPoint, Form, LineBundleDeg};
use seshadri::seshadri::{
    degree_bound, ratio, sqrt_bound_sq, BracketParams, DegreeBound, SeshadriResult, SeshadriValue, Witness,
};

use crate::error::{CliError, CliResult};
use crate::input::point_from_coeffs;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub schema_version: u32,
    pub input: InputEcho,
    pub alpha: u64,
    pub degree_bound_d: u64,
    pub degree_bound: BoundEcho,
    pub table: MultTable,
    pub result: ResultEcho,
    pub witness: Option<WitnessEcho>,
    /// Informational only; ignored by `verify` and by determinism checks.
    pub toolchain: Toolchain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputEcho {
    /// Minimal polynomial of the coordinate field; `["0","1"]` for ℚ.
    pub minpoly: Vec<String>,
    /// The three coordinates in the power basis, as given (not normalized).
    pub point: [Vec<String>; 3],
    pub gamma: String,
    #[serde(rename = "L")]
    pub l: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundEcho {
    pub m: u64,
    pub h0: u64,
    pub conditions: u64,
    pub quadratic: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ResultEcho {
    Exact { value: String },
    Interval { lower: String, upper_candidate: String, upper_sq_bound: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessEcho {
    pub degree: u32,
    pub order: u32,
    pub ratio: String,
    pub form: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Toolchain {
    pub package: String,
    pub rustc: String,
    pub target: String,
}

impl Toolchain {
    pub fn current() -> Self {
        Self {
            package: concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION")).into(),
            rustc: env!("SESH_RUSTC_VERSION").into(),
            target: env!("SESH_TARGET").into(),
        }
    }
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

impl Certificate {
    pub fn new(field: &NumberField, point: &[Vec<Rational>; 3], r: &SeshadriResult) -> Self {
        let f = format_rational;
        let result = match &r.value {
            SeshadriValue::Exact(v) => ResultEcho::Exact { value: f(v) },
            SeshadriValue::Interval { lower, upper_candidate, upper_sq_bound } => ResultEcho::Interval {
                lower: f(lower),
                upper_candidate: f(upper_candidate),
                upper_sq_bound: f(upper_sq_bound),
            },
        };
        let witness = r.witness.as_ref().map(|w| WitnessEcho {
            degree: w.form.degree(),
            order: w.order,
            ratio: f(&ratio(r.params.bundle, w.form.degree(), r.alpha, w.order)),
            form: w.form.to_literal(),
        });
        Self {
            schema_version: SCHEMA_VERSION,
            input: InputEcho {
                minpoly: strs(field.min_poly()),
                point: point.clone().map(|c| strs(&c)),
                gamma: f(&r.params.gamma),
                l: r.params.bundle.degree(),
            },
            alpha: r.alpha,
            degree_bound_d: r.bound.d,
            degree_bound: BoundEcho {
                m: r.bound.m,
                h0: r.bound.h0,
                conditions: r.bound.conditions,
                quadratic: f(&r.bound.quadratic),
            },
            table: r.table.clone(),
            result,
            witness,
            toolchain: Toolchain::current(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> CliResult<Self> {
        let c: Self = serde_json::from_str(s).map_err(|e| CliError::Malformed(e.to_string()))?;
        if c.schema_version != SCHEMA_VERSION {
            return Err(CliError::Malformed(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                c.schema_version
            )));
        }
        Ok(c)
    }
}

fn q(s: &str) -> CliResult<Rational> {
    parse_rational(s).ok_or_else(|| CliError::Malformed(format!("`{s}` is not a rational")))
}

fn qs(v: &[String]) -> CliResult<Vec<Rational>> {
    v.iter().map(|s| q(s)).collect()
}

fn fail(check: &str, detail: impl std::fmt::Display) -> CliError {
    CliError::Verification(format!("{check}: {detail}"))
}

fn ensure(ok: bool, check: &str, detail: impl std::fmt::Display) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(check, detail))
    }
}

/// Decoded contents of a certificate, before any check.
struct Decoded {
    point_coeffs: [Vec<Rational>; 3],
    minpoly: Vec<Rational>,
    params: BracketParams,
    value: SeshadriValue,
    quadratic: Rational,
    witness: Option<(Form<Rational>, u32, Rational)>,
}

fn decode(c: &Certificate) -> CliResult<Decoded> {
    let point_coeffs = [qs(&c.input.point[0])?, qs(&c.input.point[1])?, qs(&c.input.point[2])?];
    let value = match &c.result {
        ResultEcho::Exact { value } => SeshadriValue::Exact(q(value)?),
        ResultEcho::Interval { lower, upper_candidate, upper_sq_bound } => SeshadriValue::Interval {
            lower: q(lower)?,
            upper_candidate: q(upper_candidate)?,
            upper_sq_bound: q(upper_sq_bound)?,
        },
    };
    let witness = match &c.witness {
        None => None,
        Some(w) => {
            let form = Form::parse(&w.form).map_err(|e| CliError::Malformed(format!("witness form: {e}")))?;
            Some((form, w.order, q(&w.ratio)?))
        }
    };
    Ok(Decoded {
        point_coeffs,
        minpoly: qs(&c.input.minpoly)?,
        params: BracketParams::new(q(&c.input.gamma)?, LineBundleDeg(c.input.l)),
        value,
        quadratic: q(&c.degree_bound.quadratic)?,
        witness,
    })
}

/// What `verify` established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<&'static str>,
}

/// Re-checks every claim of the certificate in exact arithmetic. With
/// `deep`, the multiplicity table and the witness are recomputed from
/// scratch as well.
pub fn verify(c: &Certificate, deep: bool) -> CliResult<VerifyReport> {
    let d = decode(c)?;
    let mut checks = Vec::new();

    let field = if d.minpoly == [Rational::zero(), Rational::from_integer(1.into())] {
        NumberField::rationals()
    } else {
        NumberField::new(d.minpoly.clone()).map_err(|e| fail("field", e))?
    };
    let x: ClosedPoint = point_from_coeffs(&field, &d.point_coeffs).map_err(|e| fail("point", e))?;
    checks.push("field and point");

    ensure(c.alpha == x.residue_degree() as u64, "residue degree", format!("claimed {}, found {}", c.alpha, x.residue_degree()))?;
    checks.push("residue degree");

    let bound = degree_bound(&d.params, c.alpha).map_err(|e| fail("degree bound", e))?;
    let claimed = DegreeBound {
        d: c.degree_bound_d,
        m: c.degree_bound.m,
        h0: c.degree_bound.h0,
        conditions: c.degree_bound.conditions,
        quadratic: d.quadratic.clone(),
    };
    ensure(bound == claimed, "degree bound", format!("recomputed d = {} (m = {}, h0 = {} > {})", bound.d, bound.m, bound.h0, bound.conditions))?;
    checks.push("degree bound");

    let max_e = bound.d * c.input.l;
    let degrees_ok = c.table.entries.len() as u64 == max_e
        && c.table.entries.iter().enumerate().all(|(i, r)| r.e as usize == i + 1);
    ensure(degrees_ok, "table", format!("must list degrees 1..={max_e} in order"))?;
    ensure(c.table.is_consistent(), "table", "m_max must be nondecreasing and at most e")?;
    checks.push("table shape");

    // Best ratio over the table, smallest degree on ties.
    let best = c
        .table
        .entries
        .iter()
        .filter(|r| r.m_max >= 1)
        .map(|r| (ratio(d.params.bundle, r.e, c.alpha, r.m_max), r.e))
        .min()
        .ok_or_else(|| fail("table", "no entry with positive multiplicity"))?;
    checks.push("table ratios");

    let (form, order, wratio) = d.witness.clone().ok_or_else(|| fail("witness", "missing"))?;
    let e = form.degree();
    ensure(c.witness.as_ref().is_some_and(|w| w.degree == e), "witness", "declared degree differs from the form")?;
    let found = vanishing_order(&form, &x);
    ensure(found == order, "witness order", format!("form vanishes to order {found} at the point, certificate claims {order}"))?;
    let entry = c.table.get(e).ok_or_else(|| fail("witness", format!("degree {e} not in table")))?;
    ensure(entry.m_max == order, "witness order", format!("table has m_max({e}) = {}, witness order {order}", entry.m_max))?;
    ensure(entry.kernel_dim >= 1, "table", format!("kernel_dim at degree {e} is zero"))?;
    let r = ratio(d.params.bundle, e, c.alpha, order);
    ensure(r == wratio, "witness ratio", format!("recomputed {}", format_rational(&r)))?;
    ensure((r.clone(), e) == best, "witness ratio", "witness is not the best table entry")?;
    checks.push("witness");

    match &d.value {
        SeshadriValue::Exact(v) => {
            ensure(*v == r && r < d.params.gamma, "result", "exact value must be the best ratio and below gamma")?;
        }
        SeshadriValue::Interval { lower, upper_candidate, upper_sq_bound } => {
            ensure(r >= d.params.gamma, "result", "best ratio is below gamma, result should be exact")?;
            ensure(*lower == d.params.gamma && *upper_candidate == r, "result", "interval endpoints")?;
            let sq = sqrt_bound_sq(&d.params.bundle.self_intersection(), c.alpha);
            ensure(*upper_sq_bound == sq, "result", format!("upper_sq_bound should be {}", format_rational(&sq)))?;
        }
    }
    checks.push("result");

    let result = SeshadriResult {
        alpha: c.alpha,
        params: d.params.clone(),
        bound,
        table: c.table.clone(),
        value: d.value.clone(),
        witness: Some(Witness { form: form.clone(), order }),
    };
    result.check_invariants().map_err(|e| fail("invariants", e))?;
    result.replay_witness(&x).map_err(|e| fail("witness replay", e))?;
    checks.push("invariants");

    if deep {
        let table = mult_table(&x, max_e as u32);
        if let Some((a, b)) = table.entries.iter().zip(&c.table.entries).find(|(a, b)| a != b) {
            return Err(fail(
                "deep table",
                format!("degree {}: recomputed m_max = {}, dim = {}; certificate m_max = {}, dim = {}", a.e, a.m_max, a.kernel_dim, b.m_max, b.kernel_dim),
            ));
        }
        let w = witness(&x, e, order).ok_or_else(|| fail("deep witness", "no form of that degree and order"))?;
        ensure(w == form, "deep witness", format!("canonical witness is {}", w.to_literal()))?;
        checks.push("deep recomputation");
    }
    Ok(VerifyReport { checks })
}
