// Export a graph as an edge list, read it back and print the JSON
// analysis report.
//
//     cargo run --example edge_list_report

use std::error::Error;

use extremal_sf::extremal::build_direct;
use extremal_sf::io::{analyze, parse_edge_list, write_edge_list, AnalyzeOptions};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = build_direct(5)?.into_graph();

    let mut buf = Vec::new();
    write_edge_list(&mut buf, &g, &["model=extremal t=5".to_string()])?;
    let text = String::from_utf8(buf)?;
    println!("{}", text.lines().take(6).collect::<Vec<_>>().join("\n"));
    println!("... ({} lines)\n", text.lines().count());

    let back = parse_edge_list(&text)?;
    assert_eq!(back, g);

    print!("{}", analyze(&back, &AnalyzeOptions::default()).to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
