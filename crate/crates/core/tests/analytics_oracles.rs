use extremal_sf::analytics::{
    cumulative_distribution, default_fit_window, exact_diameter, extremal_fit_window,
    fast_diameter_bounds, fit_gamma, is_complete, CumulativeDistribution,
};
use extremal_sf::extremal::build_direct;
use extremal_sf::{Graph, GraphBuilder};
use proptest::prelude::*;

/// Random connected graph: a random recursive tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| (0..v).boxed()).collect();
        let extra = prop::collection::vec((0..n, 1..n), 0..2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut b = GraphBuilder::new(n);
            for (i, p) in parents.into_iter().enumerate() {
                b.add_edge(i + 1, p).unwrap();
            }
            for (u, d) in extra {
                b.add_edge(u, (u + d) % n).unwrap();
            }
            b.finalize()
        })
    })
}

fn floyd_warshall_diameter(g: &Graph) -> usize {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d.iter().flatten().copied().max().unwrap()
}

fn direct_count(g: &Graph, k: usize) -> u64 {
    g.degrees().filter(|&d| d >= k).count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_diameter_matches_floyd_warshall(g in connected_graph(50)) {
        let d = exact_diameter(&g).unwrap();
        prop_assert_eq!(d.diameter, floyd_warshall_diameter(&g));
        let (u, v) = d.witness;
        prop_assert_eq!(extremal_sf::analytics::distance(&g, u, v), Some(d.diameter));
        prop_assert_eq!(is_complete(&g), d.diameter <= 1);

        let b = fast_diameter_bounds(&g).unwrap();
        prop_assert!(b.lower <= d.diameter && d.diameter <= b.upper);
    }

    #[test]
    fn cumulative_matches_direct_counting(g in connected_graph(50)) {
        let c = cumulative_distribution(&g);
        prop_assert_eq!(c.total(), g.order() as u64);
        prop_assert_eq!(c.points()[0].at_least, g.order() as u64);
        for w in c.points().windows(2) {
            prop_assert!(w[0].degree < w[1].degree && w[0].at_least > w[1].at_least);
        }
        for p in c.points() {
            prop_assert_eq!(p.at_least, direct_count(&g, p.degree));
        }
    }

    #[test]
    fn synthetic_power_laws_are_recovered(alpha_tenths in 5u32..30) {
        // counts proportional to k^-alpha over a large total, so rounding
        // stays far below the tolerance
        let alpha = alpha_tenths as f64 / 10.0;
        let ks: Vec<usize> = (1..=6).map(|i| 1usize << i).collect();
        let total = 1u64 << 40;
        let points: Vec<(usize, u64)> = ks
            .iter()
            .map(|&k| (k, (total as f64 * (k as f64).powf(-alpha)).round().max(1.0) as u64))
            .collect();
        let c = CumulativeDistribution::from_counts(total, points).unwrap();
        let fit = fit_gamma(&c, 2, 64).unwrap();
        prop_assert!((fit.gamma_alpha - alpha).abs() < 1e-6, "{} vs {}", fit.gamma_alpha, alpha);
        prop_assert_eq!(fit.gamma, fit.gamma_alpha + 1.0);
        prop_assert!(fit.r_squared > 1.0 - 1e-9 && fit.r_squared <= 1.0);
    }
}

// Reference values below come from an independent evaluation of the closed
// form P(deg >= 2^ti + 1) = (2^(t-ti+2) - 1) / (2^(t+2) - 1) for the active
// rows above the leaf degree, fitted by ordinary least squares in log2-log2.

#[test]
fn extremal_sixteen_fit() {
    let g = build_direct(16).unwrap();
    let c = cumulative_distribution(g.graph());
    let (lo, hi) = extremal_fit_window(16);
    let fit = fit_gamma(&c, lo, hi).unwrap();
    assert_eq!(fit.points_used, 12);
    assert!((fit.gamma - 2.028182441879489).abs() < 1e-9, "{}", fit.gamma);
    assert!((fit.r_squared - 0.9995399003475763).abs() < 1e-9);
    assert!((1.8..=2.2).contains(&fit.gamma));

    let window = default_fit_window(&c).unwrap();
    let default_fit = fit_gamma(&c, window.0, window.1).unwrap();
    assert!((default_fit.gamma - fit.gamma).abs() < 1e-12);
}

#[test]
fn extremal_five_fit_is_steeper() {
    let g = build_direct(5).unwrap();
    let c = cumulative_distribution(g.graph());
    let (lo, hi) = default_fit_window(&c).unwrap();
    let fit = fit_gamma(&c, lo, hi).unwrap();
    assert_eq!(fit.points_used, 3);
    assert!((fit.gamma - 2.2389891106948396).abs() < 1e-9, "{}", fit.gamma);
}

#[test]
fn fitted_exponent_approaches_two() {
    let mut previous = f64::INFINITY;
    for t in 6..=16 {
        let c = cumulative_distribution(build_direct(t).unwrap().graph());
        let (lo, hi) = extremal_fit_window(t);
        let gamma = fit_gamma(&c, lo, hi).unwrap().gamma;
        assert!(gamma > 2.0 && gamma < previous, "t = {t}: {gamma}");
        previous = gamma;
    }
}

#[test]
fn extremal_diameters() {
    for t in 1..=8 {
        let g = build_direct(t).unwrap();
        assert_eq!(exact_diameter(g.graph()).unwrap().diameter, 2, "t = {t}");
    }
    for t in 1..=14 {
        let b = fast_diameter_bounds(build_direct(t).unwrap().graph()).unwrap();
        assert_eq!((b.lower, b.upper), (2, 2), "t = {t}");
    }
}
