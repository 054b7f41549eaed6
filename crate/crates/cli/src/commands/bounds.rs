use std::io::Write;

use seshadri::exactalg::format_rational;
use seshadri::seshadri::{multipoint_bound_mth_power, sqrt_bound_sq};

use super::io;
use crate::error::{CliError, CliResult};
use crate::input;
use crate::BoundsArgs;

pub fn run(a: &BoundsArgs, out: &mut dyn Write) -> CliResult<()> {
    let mut any = false;
    if let (Some(alpha), Some(s)) = (a.alpha, &a.selfint) {
        if alpha == 0 {
            return Err(CliError::Input("alpha must be positive".into()));
        }
        let b = sqrt_bound_sq(&input::rational(s)?, alpha);
        writeln!(out, "epsilon^2 <= {}", format_rational(&b)).map_err(io)?;
        any = true;
    }
    if let (Some(top), Some(degs), Some(m)) = (&a.top, &a.degs, a.dim) {
        let degs: Vec<u64> = input::int_list(degs)?
            .into_iter()
            .map(|d| u64::try_from(d).ok().filter(|&d| d > 0))
            .collect::<Option<_>>()
            .ok_or_else(|| CliError::Input("degrees must be positive".into()))?;
        if m < 2 {
            return Err(CliError::Input("dim must be at least 2".into()));
        }
        let b = multipoint_bound_mth_power(&input::rational(top)?, &degs, m);
        writeln!(out, "epsilon^{m} <= {}", format_rational(&b)).map_err(io)?;
        any = true;
    }
    if !any {
        return Err(CliError::Input("give --alpha and --selfint, or --top, --degs and --dim".into()));
    }
    Ok(())
}
