// Exact and bounded diameters of the extremal family, and the verdicts that
// separate complete graphs (diameter 1) from `G*_t` (diameter 2).
//
//     cargo run --release --example diameter_check -- 16

use std::error::Error;
use std::time::Instant;

use extremal_sf::analytics::{exact_diameter, fast_diameter_bounds, theorem_check};
use extremal_sf::extremal::build_direct;
use extremal_sf::GraphBuilder;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(None)
}

fn run(arg: Option<String>) -> Result<(), Box<dyn Error>> {
    let t_max: u32 = arg.and_then(|a| a.parse().ok()).unwrap_or(10);

    for t in 1..=t_max {
        let start = Instant::now();
        let g = build_direct(t)?;
        let b = fast_diameter_bounds(g.graph())?;
        let exact = if t <= 8 {
            exact_diameter(g.graph())?.diameter.to_string()
        } else {
            "-".into()
        };
        println!(
            "t={t:>2} n={:>9} bounds=({}, {}) exact={exact:>2}  {:.2?}",
            g.graph().order(),
            b.lower,
            b.upper,
            start.elapsed()
        );
    }

    let mut k = GraphBuilder::new(10);
    for u in 0..10 {
        for v in u + 1..10 {
            k.add_edge(u, v)?;
        }
    }
    println!("K_10:  {:?}", theorem_check(&k.finalize())?);
    println!("G*_5:  {:?}", theorem_check(build_direct(5)?.graph())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1))
}
