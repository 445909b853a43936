use serde::Serialize;

use super::AnalyticsError;
use crate::graph::Graph;

/// One point of the cumulative degree distribution: `at_least` vertices
/// have degree `>= degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CumulativePoint {
    pub degree: usize,
    pub at_least: u64,
}

/// `P(deg >= k)` for every distinct degree `k`, kept as exact counts over
/// the vertex total. Conversion to floating point happens only on request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulativeDistribution {
    total: u64,
    points: Vec<CumulativePoint>,
}

impl CumulativeDistribution {
    /// Builds a distribution from explicit counts, e.g. a synthetic fixture.
    /// Degrees must be strictly increasing and counts non-increasing,
    /// positive and at most `total`.
    pub fn from_counts(
        total: u64,
        points: impl IntoIterator<Item = (usize, u64)>,
    ) -> Result<Self, AnalyticsError> {
        let points: Vec<_> = points
            .into_iter()
            .map(|(degree, at_least)| CumulativePoint { degree, at_least })
            .collect();
        for w in points.windows(2) {
            if w[0].degree >= w[1].degree || w[0].at_least < w[1].at_least {
                return Err(AnalyticsError::InvalidDistribution(format!(
                    "points {:?} and {:?} out of order",
                    w[0], w[1]
                )));
            }
        }
        if points.iter().any(|p| p.at_least == 0 || p.at_least > total) {
            return Err(AnalyticsError::InvalidDistribution(
                "count outside 1..=total".into(),
            ));
        }
        Ok(Self { total, points })
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn points(&self) -> &[CumulativePoint] {
        &self.points
    }

    pub fn fraction(&self, p: &CumulativePoint) -> f64 {
        p.at_least as f64 / self.total as f64
    }

    /// `(k, P(deg >= k))` pairs in ascending `k`.
    pub fn fractions(&self) -> Vec<(usize, f64)> {
        self.points
            .iter()
            .map(|p| (p.degree, self.fraction(p)))
            .collect()
    }

    /// Number of vertices with degree exactly equal to the i-th point's.
    fn count_at(&self, i: usize) -> u64 {
        let next = self.points.get(i + 1).map_or(0, |p| p.at_least);
        self.points[i].at_least - next
    }
}

pub fn cumulative_distribution(g: &Graph) -> CumulativeDistribution {
    let hist = g.degree_histogram();
    // rows are sorted by degree descending, so a running sum gives P(>= k)
    let mut acc = 0u64;
    let mut points: Vec<_> = hist
        .rows()
        .iter()
        .map(|r| {
            acc += r.count;
            CumulativePoint {
                degree: r.degree,
                at_least: acc,
            }
        })
        .collect();
    points.reverse();
    CumulativeDistribution {
        total: g.order() as u64,
        points,
    }
}

/// Least-squares power-law fit of the cumulative distribution in log-log
/// space. `gamma_alpha` is the magnitude of the slope; the density exponent
/// is `gamma = gamma_alpha + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaFit {
    pub gamma_alpha: f64,
    pub gamma: f64,
    pub r_squared: f64,
    pub k_range: (usize, usize),
    pub points_used: usize,
}

/// Fits `log2 P(deg >= k)` against `log2 k` over the points with
/// `k_lo <= k <= k_hi`.
pub fn fit_gamma(
    c: &CumulativeDistribution,
    k_lo: usize,
    k_hi: usize,
) -> Result<GammaFit, AnalyticsError> {
    let pts: Vec<(f64, f64)> = c
        .points
        .iter()
        .filter(|p| (k_lo..=k_hi).contains(&p.degree) && p.degree > 0)
        .map(|p| ((p.degree as f64).log2(), c.fraction(p).log2()))
        .collect();
    if pts.len() < 3 {
        return Err(AnalyticsError::InsufficientPoints { found: pts.len() });
    }

    let n = pts.len() as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in &pts {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
        syy += (y - mean_y) * (y - mean_y);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = pts
        .iter()
        .map(|&(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    };

    let gamma_alpha = -slope;
    Ok(GammaFit {
        gamma_alpha,
        gamma: gamma_alpha + 1.0,
        r_squared,
        k_range: (k_lo, k_hi),
        points_used: pts.len(),
    })
}

/// Window that skips the most populous degree and everything below it (the
/// plateau) as well as the maximum degree (a single boundary point).
///
/// On `G*_t` the most populous degree is the leaf degree `t + 1` and the
/// maximum is the hub, so this selects the active rows above `t + 1`.
/// Returns `None` when the window would be empty.
pub fn default_fit_window(c: &CumulativeDistribution) -> Option<(usize, usize)> {
    let last = c.points.len().checked_sub(1)?;
    let mode = (0..c.points.len())
        .max_by_key(|&i| (c.count_at(i), c.points[i].degree))
        .map(|i| c.points[i].degree)?;
    let max = c.points[last].degree;
    let (lo, hi) = (mode + 1, max.checked_sub(1)?);
    (lo <= hi).then_some((lo, hi))
}

/// The active-row window `(t + 2, 2^t + 1)` for `G*_t`. Selects the same
/// points as [`default_fit_window`] on the constructed graph.
pub fn extremal_fit_window(t: u32) -> (usize, usize) {
    (t as usize + 2, (1usize << t) + 1)
}
