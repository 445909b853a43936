use serde::Serialize;

use super::diameter::{measure_diameter, DEFAULT_EXACT_BUDGET};
use super::distribution::{cumulative_distribution, default_fit_window, fit_gamma, GammaFit};
use super::AnalyticsError;
use crate::graph::Graph;

/// Thresholds for the scale-free heuristic and the diameter budget.
///
/// There is no operational definition of "scale-free" for a finite graph;
/// these numbers are explicit knobs rather than truths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerdictConfig {
    pub min_distinct: usize,
    pub min_r2: f64,
    pub exact_budget: usize,
}

impl Default for VerdictConfig {
    fn default() -> Self {
        Self {
            min_distinct: 8,
            min_r2: 0.95,
            exact_budget: DEFAULT_EXACT_BUDGET,
        }
    }
}

/// `m = n(n - 1) / 2`. Graphs with at most one vertex are complete.
pub fn is_complete(g: &Graph) -> bool {
    let n = g.order() as u128;
    n <= 1 || g.size() as u128 == n * (n - 1) / 2
}

/// Heuristic power-law classifier: enough distinct degrees, a fitted
/// exponent above 1 with a good linear fit, and not a complete graph.
pub fn scale_free_verdict(g: &Graph, fit: &GammaFit, min_distinct: usize, min_r2: f64) -> bool {
    let distinct = g.degree_histogram().rows().len();
    distinct >= min_distinct && fit.gamma > 1.0 && fit.r_squared >= min_r2 && !is_complete(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub is_complete: bool,
    pub diameter: usize,
    pub scale_free_plausible: bool,
    /// The diameter equals the lower bound 2.
    pub extremal_bound_met: bool,
}

pub fn theorem_check(g: &Graph) -> Result<TheoremVerdict, AnalyticsError> {
    theorem_check_with(g, &VerdictConfig::default())
}

/// Diameter 1 forces completeness, and a complete graph has a single degree
/// and cannot look scale-free; both implications are asserted.
pub fn theorem_check_with(
    g: &Graph,
    cfg: &VerdictConfig,
) -> Result<TheoremVerdict, AnalyticsError> {
    let diameter = measure_diameter(g, cfg.exact_budget)?.diameter;
    let complete = is_complete(g);
    let cumulative = cumulative_distribution(g);
    let scale_free_plausible = default_fit_window(&cumulative)
        .and_then(|(lo, hi)| fit_gamma(&cumulative, lo, hi).ok())
        .is_some_and(|fit| scale_free_verdict(g, &fit, cfg.min_distinct, cfg.min_r2));

    assert!(diameter != 1 || complete, "diameter 1 without completeness");
    assert!(!complete || diameter <= 1, "complete graph with diameter {diameter}");
    assert!(!(complete && scale_free_plausible));

    Ok(TheoremVerdict {
        is_complete: complete,
        diameter,
        scale_free_plausible,
        extremal_bound_met: diameter == 2,
    })
}
