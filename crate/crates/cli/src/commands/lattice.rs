use std::io::Write;
use std::path::Path;

use seshadri::exactalg::format_rational;
use seshadri::nslattice::{
    chi_rr_lattice, cover_check, is_nef_against, scaling_check, seshadri_sup, BlowupLattice, CoverSide, CurveClass,
    LatticeError, LatticeFile, SupStatus,
};

use super::io;
use crate::error::{CliError, CliResult};
use crate::input::{index_list, int_list, int_matrix};
use crate::{LatticeArgs, LatticeCommand};

fn lat(e: LatticeError) -> CliError {
    CliError::Input(e.to_string())
}

fn load(path: &Path) -> CliResult<(BlowupLattice, Vec<CurveClass>)> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: LatticeFile =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let b = file.blowup().map_err(lat)?;
    for w in b.base().advisories() {
        eprintln!("warning: {}: {w}", path.display());
    }
    let curves = file.curve_classes(&b).map_err(lat)?;
    Ok((b, curves))
}

pub fn run(a: &LatticeArgs, out: &mut dyn Write) -> CliResult<()> {
    let (b, curves) = load(&a.file)?;
    match &a.command {
        LatticeCommand::Seshadri { point, l, complete } => {
            let r = seshadri_sup(&int_list(l)?, &index_list(point)?, &curves, *complete, &b).map_err(lat)?;
            let status = match r.status {
                SupStatus::Exact => "exact",
                SupStatus::UpperBound => "upper bound",
            };
            writeln!(out, "{}", format_rational(&r.value)).map_err(io)?;
            writeln!(out, "status: {status} (curve {})", r.curve).map_err(io)?;
            writeln!(out, "epsilon^2 <= {}{}", format_rational(&r.sq_cap), if r.capped { " (sharper than the curve list)" } else { "" })
                .map_err(io)?;
        }
        LatticeCommand::Chi { d } => {
            let chi = chi_rr_lattice(&int_list(d)?, b.base()).map_err(lat)?;
            writeln!(out, "{}", format_rational(&chi)).map_err(io)?;
        }
        LatticeCommand::Nef { class } => {
            let nef = is_nef_against(&int_list(class)?, &curves, &b).map_err(lat)?;
            writeln!(out, "{}", if nef { "nef against the listed curves" } else { "not nef" }).map_err(io)?;
        }
        LatticeCommand::Scaling { point, l, n } => {
            let (l, pts) = (int_list(l)?, index_list(point)?);
            let mut all = true;
            for &k in n {
                if k < 1 {
                    return Err(CliError::Input("n must be at least 1".into()));
                }
                let ok = scaling_check(&l, k, &pts, &curves, &b).map_err(lat)?;
                writeln!(out, "n = {k}: {}", if ok { "pass" } else { "FAIL" }).map_err(io)?;
                all &= ok;
            }
            if !all {
                return Err(CliError::Internal("scaling identity failed".into()));
            }
        }
        LatticeCommand::Cover { y, phi, l, point } => {
            let (yb, yc) = load(y)?;
            let rep = cover_check(
                &int_matrix(phi)?,
                &int_list(l)?,
                CoverSide { lattice: &b, curves: &curves },
                *point,
                CoverSide { lattice: &yb, curves: &yc },
            )
            .map_err(lat)?;
            let f = format_rational;
            writeln!(out, "eps(Y, g*L, fiber) = {}", f(&rep.eps_fiber)).map_err(io)?;
            writeln!(out, "eps(Z, L, z) = {}", f(&rep.eps_z)).map_err(io)?;
            writeln!(out, "eps(Y, g*L, y1) = {}", f(&rep.eps_first)).map_err(io)?;
            writeln!(out, "equality: {}", if rep.equality { "yes" } else { "no" }).map_err(io)?;
            writeln!(out, "single-point inequality: {}", if rep.single_point_inequality { "yes" } else { "no" })
                .map_err(io)?;
            if rep.list_incomplete {
                writeln!(out, "list incomplete: the supplied curve lists cannot both be complete").map_err(io)?;
            }
        }
    }
    Ok(())
}
