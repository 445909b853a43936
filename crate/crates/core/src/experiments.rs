//! Reproducible verification campaigns over the extremal family and the
//! preferential-attachment baseline.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analytics::{self, AnalyticsError, DiameterMethod};
use crate::baseline::{generate_ba, BaConfig, BaselineError};
use crate::extremal::{
    self, build_direct, build_recursive, closed_form_degree_table, order_formula, size_formula,
    ModelError, PruneRule, DEFAULT_RECURSIVE_BUDGET,
};
use crate::graph::{DegreeTable, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Analytics(#[from] AnalyticsError),
    #[error(transparent)]
    Baseline(#[from] BaselineError),
    #[error("t_max = {t_max} exceeds the recursive-constructor budget {budget}")]
    BudgetExceeded { t_max: u32, budget: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Constructor {
    Direct,
    Recursive,
}

impl Constructor {
    pub fn build(self, t: u32) -> Result<extremal::ClassifiedGraph, ModelError> {
        match self {
            Constructor::Direct => build_direct(t),
            Constructor::Recursive => build_recursive(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaRow {
    pub t: u32,
    pub order_expected: u64,
    pub order_actual: u64,
    pub size_expected: u64,
    pub size_actual: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaReport {
    pub constructor: Constructor,
    pub rows: Vec<FormulaRow>,
}

impl FormulaReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn check_recursive_budget(t_max: u32, budget: u32) -> Result<(), ExperimentError> {
    if t_max > budget {
        Err(ExperimentError::BudgetExceeded { t_max, budget })
    } else {
        Ok(())
    }
}

/// Builds `G*_t` for every `t` in `0..=t_max` and compares order and size
/// with the closed forms.
pub fn verify_formulas(
    t_max: u32,
    constructor: Constructor,
) -> Result<FormulaReport, ExperimentError> {
    if constructor == Constructor::Recursive {
        check_recursive_budget(t_max, DEFAULT_RECURSIVE_BUDGET)?;
    }
    let rows = (0..=t_max)
        .map(|t| {
            let g = constructor.build(t)?;
            let order_expected = order_formula(t)?;
            let size_expected = size_formula(t)?;
            let order_actual = g.graph().order() as u64;
            let size_actual = g.graph().size() as u64;
            Ok(FormulaRow {
                t,
                order_expected,
                order_actual,
                size_expected,
                size_actual,
                pass: order_expected == order_actual && size_expected == size_actual,
            })
        })
        .collect::<Result<_, ExperimentError>>()?;
    Ok(FormulaReport { constructor, rows })
}

/// For each `t` in `0..=t_max`: do both constructors give the same graph?
pub fn constructor_equivalence(t_max: u32) -> Result<Vec<bool>, ExperimentError> {
    constructor_equivalence_with(t_max, PruneRule::LeafClass, DEFAULT_RECURSIVE_BUDGET)
}

pub fn constructor_equivalence_with(
    t_max: u32,
    rule: PruneRule,
    budget: u32,
) -> Result<Vec<bool>, ExperimentError> {
    check_recursive_budget(t_max, budget)?;
    (0..=t_max)
        .map(|t| {
            let (recursive, _) = extremal::build_recursive_traced(t, rule)?;
            Ok(recursive == build_direct(t)?)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeTableRow {
    pub t: u32,
    pub expected: DegreeTable,
    pub actual: DegreeTable,
    pub pass: bool,
}

/// Compares the degree histogram of `build_direct(t)` with the closed-form
/// table for `t` in `1..=t_max`.
pub fn degree_table_conformance(t_max: u32) -> Result<Vec<DegreeTableRow>, ExperimentError> {
    (1..=t_max)
        .map(|t| {
            let expected = closed_form_degree_table(t)?;
            let actual = build_direct(t)?.graph().degree_histogram();
            Ok(DegreeTableRow {
                t,
                pass: expected == actual,
                expected,
                actual,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterRow {
    pub t: u32,
    pub n: usize,
    /// Exact value when `n` fits the budget.
    pub exact: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub pass: bool,
}

/// Diameter of `G*_t` for `t` in `1..=t_max`: exact within `exact_budget`,
/// plus the fast bounds everywhere. A row passes when everything reported
/// equals 2.
pub fn diameter_verification(
    t_max: u32,
    exact_budget: usize,
) -> Result<Vec<DiameterRow>, ExperimentError> {
    (1..=t_max)
        .map(|t| {
            let g = build_direct(t)?;
            let n = g.graph().order();
            let exact = if n <= exact_budget {
                Some(analytics::exact_diameter_with_budget(g.graph(), exact_budget)?.diameter)
            } else {
                None
            };
            let b = analytics::fast_diameter_bounds(g.graph())?;
            Ok(DiameterRow {
                t,
                n,
                exact,
                lower: b.lower,
                upper: b.upper,
                pass: exact.is_none_or(|d| d == 2) && b.lower == 2 && b.upper == 2,
            })
        })
        .collect()
}

/// One graph to measure in a scaling campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelSpec {
    Extremal { t: u32 },
    Ba { n: usize, m: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Extremal,
    Ba,
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModelKind::Extremal => "extremal",
            ModelKind::Ba => "ba",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalingRow {
    pub model: ModelKind,
    pub n: usize,
    pub params: String,
    pub seed: Option<u64>,
    pub diameter: usize,
    pub method: DiameterMethod,
    pub witness: (VertexId, VertexId),
}

/// Extremal `t` in {4, 8, 12}; preferential attachment with `m = 2` at
/// `n` in {1024, 4096, 16384}, seeds 1..=3.
pub fn default_scaling_spec() -> Vec<ModelSpec> {
    let mut spec: Vec<_> = [4, 8, 12]
        .into_iter()
        .map(|t| ModelSpec::Extremal { t })
        .collect();
    for n in [1024, 4096, 16384] {
        for seed in 1..=3 {
            spec.push(ModelSpec::Ba { n, m: 2, seed });
        }
    }
    spec
}

fn measure(spec: &ModelSpec, exact_budget: usize) -> Result<ScalingRow, ExperimentError> {
    let (model, graph, params, seed) = match *spec {
        ModelSpec::Extremal { t } => (
            ModelKind::Extremal,
            build_direct(t)?.into_graph(),
            format!("t={t}"),
            None,
        ),
        ModelSpec::Ba { n, m, seed } => (
            ModelKind::Ba,
            generate_ba(&BaConfig::new(n, m, seed)?)?,
            format!("m={m}"),
            Some(seed),
        ),
    };
    let d = analytics::measure_diameter(&graph, exact_budget)?;
    Ok(ScalingRow {
        model,
        n: graph.order(),
        params,
        seed,
        diameter: d.diameter,
        method: d.method,
        witness: d.witness,
    })
}

/// Measures the diameter of every configured graph. Rows are computed in
/// parallel and returned sorted by (model, n, params, seed).
pub fn diameter_scaling(
    spec: &[ModelSpec],
    exact_budget: usize,
) -> Result<Vec<ScalingRow>, ExperimentError> {
    let mut rows = spec
        .par_iter()
        .map(|s| measure(s, exact_budget))
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| {
        (a.model, a.n, &a.params, a.seed).cmp(&(b.model, b.n, &b.params, b.seed))
    });
    Ok(rows)
}

/// Mean diameter per `(model, n)`, in row order.
pub fn seed_averages(rows: &[ScalingRow]) -> Vec<(ModelKind, usize, f64)> {
    let mut out: Vec<(ModelKind, usize, f64, usize)> = Vec::new();
    for r in rows {
        match out.last_mut() {
            Some(last) if last.0 == r.model && last.1 == r.n => {
                last.2 += r.diameter as f64;
                last.3 += 1;
            }
            _ => out.push((r.model, r.n, r.diameter as f64, 1)),
        }
    }
    out.into_iter()
        .map(|(m, n, sum, k)| (m, n, sum / k as f64))
        .collect()
}
