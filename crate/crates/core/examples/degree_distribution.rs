// Degree table, cumulative distribution and fitted exponent of `G*_t`.
//
//     cargo run --example degree_distribution -- 12

use std::error::Error;

use extremal_sf::analytics::{
    cumulative_distribution, default_fit_window, fit_gamma, scale_free_verdict,
};
use extremal_sf::extremal::{build_direct, closed_form_degree_table};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(None)
}

fn run(arg: Option<String>) -> Result<(), Box<dyn Error>> {
    let t: u32 = arg.and_then(|a| a.parse().ok()).unwrap_or(12);

    let g = build_direct(t)?;
    let table = g.graph().degree_histogram();
    assert_eq!(table, closed_form_degree_table(t)?);

    println!("G*_{t}: {} vertices, {} edges", g.graph().order(), g.graph().size());
    println!("{:>8} {:>8}", "degree", "count");
    for row in table.rows() {
        println!("{:>8} {:>8}", row.degree, row.count);
    }

    let c = cumulative_distribution(g.graph());
    println!("\n{:>8} {:>12}", "k", "P(deg>=k)");
    for (k, p) in c.fractions() {
        println!("{k:>8} {p:>12.6}");
    }

    let (lo, hi) = default_fit_window(&c).ok_or("no fit window")?;
    let fit = fit_gamma(&c, lo, hi)?;
    println!(
        "\nfit over k in [{lo}, {hi}] ({} points): gamma_alpha = {:.4}, gamma = {:.4}, r^2 = {:.5}",
        fit.points_used, fit.gamma_alpha, fit.gamma, fit.r_squared
    );
    println!(
        "scale-free heuristic (8 distinct degrees, r^2 >= 0.95): {}",
        scale_free_verdict(g.graph(), &fit, 8, 0.95)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1))
}
