pub mod base_change;
pub mod bounds;
pub mod lattice;
pub mod p2;
pub mod verify;

use seshadri::exactalg::format_rational;
use seshadri::seshadri::{SeshadriError, SeshadriValue};

use crate::error::CliError;

pub(crate) fn io(e: std::io::Error) -> CliError {
    CliError::Internal(format!("write failed: {e}"))
}

pub(crate) fn seshadri_err(e: SeshadriError) -> CliError {
    CliError::Input(e.to_string())
}

/// `= v` or `in [a,b]`.
pub(crate) fn short_value(v: &SeshadriValue) -> String {
    match v {
        SeshadriValue::Exact(x) => format!("= {}", format_rational(x)),
        SeshadriValue::Interval { lower, upper_candidate, .. } => {
            format!("in [{},{}]", format_rational(lower), format_rational(upper_candidate))
        }
    }
}
