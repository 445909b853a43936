//! Degree-distribution statistics, diameters and the diameter-2 verdict.

mod diameter;
mod distribution;
mod verdict;

use thiserror::Error;

pub use diameter::{
    distance, eccentricity, exact_diameter, exact_diameter_with_budget, fast_diameter_bounds,
    measure_diameter, DiameterBounds, DiameterMethod, DiameterResult, DEFAULT_EXACT_BUDGET,
};
pub use distribution::{
    cumulative_distribution, default_fit_window, extremal_fit_window, fit_gamma,
    CumulativeDistribution, CumulativePoint, GammaFit,
};
pub use verdict::{
    is_complete, scale_free_verdict, theorem_check, theorem_check_with, TheoremVerdict,
    VerdictConfig,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyticsError {
    #[error("graph is disconnected; its diameter is infinite")]
    Disconnected,
    #[error("diameter needs at least 2 vertices (got {order})")]
    TooSmall { order: usize },
    #[error("{order} vertices exceed the exact-diameter budget of {budget}; use fast_diameter_bounds")]
    ExceedsBudget { order: usize, budget: usize },
    #[error("exponent fit needs at least 3 points in range, found {found}")]
    InsufficientPoints { found: usize },
    #[error("invalid cumulative distribution: {0}")]
    InvalidDistribution(String),
    #[error("diameter bounds {lower}..={upper} do not determine the diameter")]
    BoundsInconclusive { lower: usize, upper: usize },
}
