use std::io::Write;

use seshadri::p2geom::LineBundleDeg;
use seshadri::seshadri::{base_change_compare, BaseChangeCase, BracketParams, Inequality};

use super::{io, seshadri_err, short_value};
use crate::commands::p2::{field_name, parse};
use crate::error::{CliError, CliResult};
use crate::input;
use crate::BaseChangeArgs;

pub fn run(a: &BaseChangeArgs, out: &mut dyn Write) -> CliResult<()> {
    let p = parse(&a.point)?;
    let ext = if a.ext == "self" { p.point.field().clone() } else { input::field(Some(&a.ext))? };
    let params_k = match &a.gamma_k {
        Some(g) => Some(BracketParams::new(input::rational(g)?, LineBundleDeg(a.point.l))),
        None => None,
    };
    let rep = base_change_compare(&p.point, &ext, &p.params, params_k.as_ref()).map_err(seshadri_err)?;
    let verdict = match rep.inequality {
        Inequality::Equal => "equality holds",
        Inequality::Strict => "inequality holds (strict)",
        Inequality::Holds => "inequality holds",
        Inequality::Undetermined => "inequality undetermined (brackets overlap)",
        Inequality::Violated => "inequality VIOLATED",
    };
    writeln!(out, "eps_Q {}, eps_K {}, {verdict}", short_value(&rep.over_q.value), short_value(&rep.over_k.value))
        .map_err(io)?;
    let case = match rep.case {
        BaseChangeCase::RationalPoint => "rational point",
        BaseChangeCase::ResidueField => "residue field",
    };
    writeln!(out, "case: {case}, K = {}", field_name(&ext)).map_err(io)?;
    if let Some(same) = rep.tables_identical {
        writeln!(out, "tables identical: {}", if same { "yes" } else { "no" }).map_err(io)?;
        if !same {
            return Err(CliError::Internal("multiplicity tables differ under base change".into()));
        }
    }
    if rep.inequality == Inequality::Violated {
        return Err(CliError::Internal("eps_K < eps_Q contradicts base-change monotonicity".into()));
    }
    Ok(())
}
