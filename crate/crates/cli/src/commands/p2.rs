use std::io::Write;

use seshadri::exactalg::format_rational;
use seshadri::numfield::NumberField;
use seshadri::p2geom::{ClosedPoint, LineBundleDeg};
use seshadri::seshadri::{ratio, seshadri_p2, BracketParams, SeshadriResult, SeshadriValue};

use super::{io, seshadri_err};
use crate::cert::Certificate;
use crate::error::{CliError, CliResult};
use crate::input;
use crate::{ComputeArgs, PointArgs};

pub(crate) struct Parsed {
    pub field: NumberField,
    pub coeffs: [Vec<seshadri::Rational>; 3],
    pub point: ClosedPoint,
    pub params: BracketParams,
}

pub(crate) fn parse(a: &PointArgs) -> CliResult<Parsed> {
    let field = input::field(a.minpoly.as_deref())?;
    let coeffs = input::point_coords(&field, &a.point)?;
    let point = input::point_from_coeffs(&field, &coeffs)?;
    if a.l == 0 {
        return Err(CliError::Input("L must be at least 1".into()));
    }
    let params = BracketParams::new(input::rational(&a.gamma)?, LineBundleDeg(a.l));
    Ok(Parsed { field, coeffs, point, params })
}

pub(crate) fn field_name(k: &NumberField) -> String {
    if k.is_rationals() {
        "Q".into()
    } else {
        format!("Q[t]/({})", k.min_poly_string(input::MINPOLY_VAR))
    }
}

fn report(p: &Parsed, r: &SeshadriResult, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "point {} over {}, alpha = {}", p.point, field_name(&p.field), r.alpha)?;
    let b = &r.bound;
    writeln!(
        out,
        "gamma = {}, L = {}, degree bound d = {} (m = {}, h0 = {} > {} conditions)",
        format_rational(&r.params.gamma),
        r.params.bundle.degree(),
        b.d,
        b.m,
        b.h0,
        b.conditions
    )?;
    writeln!(out, "{:>4} {:>6} {:>6}  ratio", "e", "m_max", "dim")?;
    for row in &r.table.entries {
        let q = if row.m_max == 0 { "-".into() } else { format_rational(&ratio(r.params.bundle, row.e, r.alpha, row.m_max)) };
        writeln!(out, "{:>4} {:>6} {:>6}  {q}", row.e, row.m_max, row.kernel_dim)?;
    }
    match &r.value {
        SeshadriValue::Exact(v) => writeln!(out, "result: exact {}", format_rational(v))?,
        SeshadriValue::Interval { lower, upper_candidate, upper_sq_bound } => writeln!(
            out,
            "result: interval [{}, {}], epsilon^2 <= {}",
            format_rational(lower),
            format_rational(upper_candidate),
            format_rational(upper_sq_bound)
        )?,
    }
    if let Some(w) = &r.witness {
        writeln!(out, "witness: {} (degree {}, order {})", w.form.to_literal(), w.form.degree(), w.order)?;
    }
    Ok(())
}

pub fn compute(a: &ComputeArgs, out: &mut dyn Write) -> CliResult<()> {
    let p = parse(&a.point)?;
    let r = seshadri_p2(&p.point, &p.params).map_err(seshadri_err)?;
    r.check_invariants().map_err(CliError::Internal)?;
    r.replay_witness(&p.point).map_err(CliError::Internal)?;
    report(&p, &r, out).map_err(io)?;
    if let Some(path) = &a.out {
        let cert = Certificate::new(&p.field, &p.coeffs, &r);
        std::fs::write(path, cert.to_json())
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))?;
        writeln!(out, "certificate: {}", path.display()).map_err(io)?;
    }
    Ok(())
}
