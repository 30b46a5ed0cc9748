//! Frontend for the `qhsing` analyzer: report assembly, table regeneration,
//! the catalog listing and the numerical verification driver.

pub mod error;
pub mod listing;
pub mod report;
pub mod tables;
pub mod verify;

pub use error::CliError;
pub use report::{analyze, AnalysisReport};
pub use tables::{emit_tables, TableDoc, TableKind};

use num_bigint::BigInt;
use qhsing::Rat;

pub const TOOL_NAME: &str = "qhsing";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Parses `7`, `-3/2` or `2.5` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rat, CliError> {
    let bad = || CliError::Usage(format!("not a rational number: `{text}`"));
    let t = text.trim();
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        let digits = format!("{int_digits}{frac}");
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        let r = Rat::new(num, den);
        return Ok(if negative { -r } else { r });
    }
    t.parse::<Rat>().map_err(|_| bad())
}

/// Reads `a..b`, `a..=b` or `a-b` (inclusive) or a single `k`.
pub fn parse_k_range(text: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("invalid k range: `{text}`"));
    let t = text.trim();
    let (lo, hi) = if let Some((a, b)) = t.split_once("..") {
        (a, b.trim_start_matches('='))
    } else if let Some((a, b)) = t.split_once('-') {
        (a, b)
    } else {
        (t, t)
    };
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}
