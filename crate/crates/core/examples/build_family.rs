// Build the first members of the extremal family with both constructors
// and show how canonical addressing lines them up.
//
//     cargo run --example build_family -- 4

use std::error::Error;

use extremal_sf::extremal::{
    build_direct, build_recursive_traced, class_census, order_formula, size_formula, PruneRule,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(None)
}

fn run(arg: Option<String>) -> Result<(), Box<dyn Error>> {
    let t_max: u32 = arg.and_then(|a| a.parse().ok()).unwrap_or(4);

    println!(" t  order   size  pruned/copy  same-as-direct");
    for t in 0..=t_max {
        let (recursive, trace) = build_recursive_traced(t, PruneRule::LeafClass)?;
        let direct = build_direct(t)?;
        let g = direct.graph();
        assert_eq!(g.order() as u64, order_formula(t)?);
        assert_eq!(g.size() as u64, size_formula(t)?);
        let pruned = trace.last().map_or(0, |s| s.deleted_per_copy);
        println!(
            "{t:>2} {:>6} {:>6} {pruned:>12}  {}",
            g.order(),
            g.size(),
            recursive == direct
        );
    }

    let g = build_direct(2)?;
    println!("\nvertices of G*_2:");
    for v in 0..g.graph().order() {
        println!(
            "  {v:>2}  {:<14} degree {}",
            g.address_of(v).to_string(),
            g.graph().degree(v)?
        );
    }
    println!("census: {:?}", class_census(&g)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1))
}
