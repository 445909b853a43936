// Diameter of preferential-attachment graphs next to the extremal family.
//
//     cargo run --release --example baseline_contrast

use std::error::Error;

use extremal_sf::experiments::{diameter_scaling, seed_averages, ModelSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut spec: Vec<ModelSpec> = [4, 6, 8].map(|t| ModelSpec::Extremal { t }).to_vec();
    for n in [256, 1024, 4096] {
        for seed in 1..=3 {
            spec.push(ModelSpec::Ba { n, m: 2, seed });
        }
    }

    let rows = diameter_scaling(&spec, 1 << 16)?;
    println!("{:<9} {:>6} {:>7} {:>5} {:>4}", "model", "n", "params", "seed", "D");
    for r in &rows {
        let seed = r.seed.map(|s| s.to_string()).unwrap_or_default();
        println!(
            "{:<9} {:>6} {:>7} {seed:>5} {:>4}",
            r.model.to_string(),
            r.n,
            r.params,
            r.diameter
        );
    }
    println!();
    for (model, n, mean) in seed_averages(&rows) {
        println!("{model:<9} n={n:<6} mean diameter {mean:.2}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
