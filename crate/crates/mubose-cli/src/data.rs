//! Measured-point CSV ingestion.
//!
//! Schema: header row with columns `k_mev` and `lambda2` (any order,
//! extra columns ignored), optional `sigma` defaulting to 1.0, fields
//! trimmed, lines starting with `#` skipped. Every reported problem
//! carries the 1-based line number where one exists.

use std::path::Path;

/// One measured two-particle intercept value.
#[derive(Debug)]
pub struct DataPoint {
    pub k_mev: f64,
    pub lambda2: f64,
    pub sigma: f64,
}

pub fn read_points(path: &Path) -> Result<Vec<DataPoint>, String> {
    let raw = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_points(&raw).map_err(|m| format!("{}: {m}", path.display()))
}

fn parse_points(raw: &str) -> Result<Vec<DataPoint>, String> {
    if raw.trim().is_empty() {
        return Err("empty input".into());
    }
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(raw.as_bytes());
    let headers = rdr.headers().map_err(|e| format!("header: {e}"))?.clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let k_col = col("k_mev").ok_or("missing required column k_mev")?;
    let l_col = col("lambda2").ok_or("missing required column lambda2")?;
    let s_col = col("sigma");

    let mut points = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| {
            if let csv::ErrorKind::UnequalLengths { expected_len, len, .. } = e.kind() {
                if let Some(p) = e.position() {
                    return format!(
                        "line {}: expected {expected_len} fields, found {len}",
                        line_at(raw, p.byte())
                    );
                }
            }
            e.to_string()
        })?;
        let line = rec.position().map(|p| line_at(raw, p.byte())).unwrap_or(0);
        let field = |idx: usize, name: &str| -> Result<f64, String> {
            let s = rec
                .get(idx)
                .ok_or_else(|| format!("line {line}: missing {name} field"))?;
            s.parse::<f64>()
                .map_err(|_| format!("line {line}: {name} is not a number: {s:?}"))
        };
        let k_mev = field(k_col, "k_mev")?;
        let lambda2 = field(l_col, "lambda2")?;
        let sigma = match s_col {
            Some(idx) => field(idx, "sigma")?,
            None => 1.0,
        };
        if !k_mev.is_finite() || k_mev < 0.0 {
            return Err(format!("line {line}: k_mev must be finite and non-negative"));
        }
        if !lambda2.is_finite() || lambda2 <= 0.0 {
            return Err(format!("line {line}: lambda2 must be finite and positive"));
        }
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(format!("line {line}: sigma must be finite and positive"));
        }
        points.push(DataPoint { k_mev, lambda2, sigma });
    }
    if points.is_empty() {
        return Err("no data rows".into());
    }
    Ok(points)
}

// The csv reader's own line counter skips comment lines, so error messages
// built from it point at the wrong physical line whenever a `#` line appears
// earlier in the file. Recover the physical line from the byte offset instead.
// The recorded offset sits before any comment or blank lines that precede the
// record, so step past those to reach the record itself.
fn line_at(raw: &str, byte: u64) -> usize {
    let start = (byte as usize).min(raw.len());
    let mut line = raw[..start].matches('\n').count() + 1;
    for l in raw[start..].split('\n') {
        let l = l.trim_end_matches('\r');
        if l.is_empty() || l.starts_with('#') {
            line += 1;
        } else {
            break;
        }
    }
    line
}
