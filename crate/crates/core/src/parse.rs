//! Text decoders for the command-line surface: coefficient lists and angle
//! literals. Both take untrusted input and must never panic.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::poly_bounds::CoefficientSequence;

/// Accepts a JSON array (`[1, 2, 3]`) or a comma-separated list (`1,2,3`),
/// constant term first.
pub fn parse_coeffs(input: &str) -> Result<CoefficientSequence> {
    let trimmed = input.trim();
    let values: Vec<f64> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("coefficients: {e}")))?
    } else {
        if trimmed.is_empty() {
            return Err(Error::Empty);
        }
        trimmed
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                let tok = tok.trim();
                tok.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("coefficient {i}: invalid number {tok:?}")))
            })
            .collect::<Result<_>>()?
    };
    CoefficientSequence::new(values)
}

/// Decimal radians, or a rational multiple of pi written `pi`, `kpi`,
/// `pi/m` or `kpi/m` (optionally signed). The multiple is formed as
/// `k * pi / m`.
pub fn parse_theta(input: &str) -> Result<f64> {
    let s = input.trim();
    let bad = || Error::Parse(format!("invalid angle {input:?}"));
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s.strip_prefix('+').unwrap_or(s)),
    };
    if let Some(at) = body.find("pi") {
        let (num, rest) = body.split_at(at);
        let rest = &rest[2..];
        let k: u64 = if num.is_empty() {
            1
        } else {
            digits(num).ok_or_else(bad)?
        };
        let m: u64 = match rest.strip_prefix('/') {
            Some(den) => digits(den).ok_or_else(bad)?,
            None if rest.is_empty() => 1,
            None => return Err(bad()),
        };
        if m == 0 {
            return Err(bad());
        }
        return Ok(sign * (k as f64) * PI / (m as f64));
    }
    // sign already stripped; a second one is malformed
    if body.starts_with(['+', '-']) {
        return Err(bad());
    }
    let v: f64 = body.parse().map_err(|_| bad())?;
    if v.is_finite() {
        Ok(sign * v)
    } else {
        Err(bad())
    }
}

fn digits(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
