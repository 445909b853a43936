//! JSON analysis report, schema version 1.
//!
//! Floating-point values are rounded to 15 significant digits before
//! serialization so reports are byte-stable for identical input.

use serde::Serialize;

use crate::analytics::{
    self, cumulative_distribution, default_fit_window, fit_gamma, is_complete, scale_free_verdict,
    DiameterMethod, GammaFit, VerdictConfig, DEFAULT_EXACT_BUDGET,
};
use crate::graph::{DegreeTable, Graph};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyzeOptions {
    /// Lower end of the fit window; defaults to the start of
    /// [`default_fit_window`].
    pub fit_klo: Option<usize>,
    pub fit_khi: Option<usize>,
    pub exact_budget: usize,
    pub min_distinct: usize,
    pub min_r2: f64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        let v = VerdictConfig::default();
        Self {
            fit_klo: None,
            fit_khi: None,
            exact_budget: DEFAULT_EXACT_BUDGET,
            min_distinct: v.min_distinct,
            min_r2: v.min_r2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CumulativeEntry {
    pub degree: usize,
    pub at_least: u64,
    pub fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaFitEntry {
    pub gamma_alpha: f64,
    pub gamma: f64,
    pub r_squared: f64,
    pub k_range: [usize; 2],
    pub points_used: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiameterEntry {
    pub value: Option<usize>,
    pub witness: Option<[usize; 2]>,
    pub method: DiameterMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub is_complete: bool,
    pub scale_free_plausible: bool,
    pub extremal_bound_met: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub order: usize,
    pub size: usize,
    pub connected: bool,
    pub degree_table: DegreeTable,
    pub cumulative_distribution: Vec<CumulativeEntry>,
    pub gamma_fit: Option<GammaFitEntry>,
    pub diameter: Option<DiameterEntry>,
    pub verdicts: Verdicts,
    pub notes: Vec<String>,
}

fn sig15(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.14e}").parse().unwrap_or(x)
    } else {
        x
    }
}

impl From<GammaFit> for GammaFitEntry {
    fn from(f: GammaFit) -> Self {
        Self {
            gamma_alpha: sig15(f.gamma_alpha),
            gamma: sig15(f.gamma),
            r_squared: sig15(f.r_squared),
            k_range: [f.k_range.0, f.k_range.1],
            points_used: f.points_used,
        }
    }
}

fn measure(g: &Graph, budget: usize, notes: &mut Vec<String>) -> Option<DiameterEntry> {
    if g.order() <= budget {
        return match analytics::exact_diameter_with_budget(g, budget) {
            Ok(d) => Some(DiameterEntry {
                value: Some(d.diameter),
                witness: Some([d.witness.0, d.witness.1]),
                method: DiameterMethod::Exact,
                bounds: None,
            }),
            Err(e) => {
                notes.push(format!("diameter omitted: {e}"));
                None
            }
        };
    }
    match analytics::fast_diameter_bounds(g) {
        Ok(b) => {
            let tight = b.lower == b.upper;
            if !tight {
                notes.push(format!(
                    "order exceeds exact budget {budget}; diameter only bounded"
                ));
            }
            Some(DiameterEntry {
                value: tight.then_some(b.lower),
                witness: Some([b.lower_witness.0, b.lower_witness.1]),
                method: DiameterMethod::Bounded,
                bounds: Some([b.lower, b.upper]),
            })
        }
        Err(e) => {
            notes.push(format!("diameter omitted: {e}"));
            None
        }
    }
}

/// Runs the full analysis pipeline on `g`. Disconnection and fit failures
/// are recorded in `notes`, never fatal.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> AnalysisReport {
    let mut notes = Vec::new();
    let connected = g.is_connected();
    let cumulative = cumulative_distribution(g);

    let window = default_fit_window(&cumulative);
    let klo = opts.fit_klo.or(window.map(|w| w.0));
    let khi = opts.fit_khi.or(window.map(|w| w.1));
    let fit = match (klo, khi) {
        (Some(lo), Some(hi)) => match fit_gamma(&cumulative, lo, hi) {
            Ok(f) => Some(f),
            Err(e) => {
                notes.push(format!("gamma fit omitted: {e}"));
                None
            }
        },
        _ => {
            notes.push("gamma fit omitted: no default window for this degree sequence".into());
            None
        }
    };

    let diameter = measure(g, opts.exact_budget, &mut notes);
    let value = diameter.as_ref().and_then(|d| d.value);

    let complete = is_complete(g);
    let verdicts = Verdicts {
        is_complete: complete,
        scale_free_plausible: fit
            .is_some_and(|f| scale_free_verdict(g, &f, opts.min_distinct, opts.min_r2)),
        extremal_bound_met: value == Some(2),
    };

    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        order: g.order(),
        size: g.size(),
        connected,
        degree_table: g.degree_histogram(),
        cumulative_distribution: cumulative
            .points()
            .iter()
            .map(|p| CumulativeEntry {
                degree: p.degree,
                at_least: p.at_least,
                fraction: sig15(cumulative.fraction(p)),
            })
            .collect(),
        gamma_fit: fit.map(Into::into),
        diameter,
        verdicts,
        notes,
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
