use std::io::Write;

use super::io;
use crate::cert::{verify, Certificate};
use crate::error::{CliError, CliResult};
use crate::VerifyArgs;

pub fn run(a: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let text = std::fs::read_to_string(&a.certificate)
        .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", a.certificate.display())))?;
    let cert = Certificate::from_json(&text)?;
    let report = verify(&cert, a.deep)?;
    for c in &report.checks {
        writeln!(out, "ok  {c}").map_err(io)?;
    }
    writeln!(out, "certificate verified").map_err(io)
}
