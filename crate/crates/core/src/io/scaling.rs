//! Scaling-campaign spec files (JSON) and result tables (CSV).
//!
//! A spec is a JSON array of model entries:
//!
//! ```json
//! [
//!   {"model": "extremal", "t": 8},
//!   {"model": "ba", "n": 4096, "m": 2, "seed": 1}
//! ]
//! ```
//!
//! An empty (or all-whitespace) file is an empty spec.

use std::io::Write;

use thiserror::Error;

use crate::experiments::{ModelSpec, ScalingRow};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("invalid scaling spec: {0}")]
    Json(#[from] serde_json::Error),
}

pub fn parse_scaling_spec(text: &str) -> Result<Vec<ModelSpec>, SpecError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(serde_json::from_str(text)?)
}

/// Columns: `model,n,params,seed,diameter,method`. The seed is empty for
/// deterministic models.
pub fn write_scaling_csv<W: Write>(w: W, rows: &[ScalingRow]) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["model", "n", "params", "seed", "diameter", "method"])?;
    for r in rows {
        out.write_record([
            r.model.to_string(),
            r.n.to_string(),
            r.params.clone(),
            r.seed.map(|s| s.to_string()).unwrap_or_default(),
            r.diameter.to_string(),
            r.method.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}
