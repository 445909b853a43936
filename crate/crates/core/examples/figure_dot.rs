// DOT drawings of G*_0, G*_1 and G*_2. Pass a directory to write
// `g0.dot` .. `g2.dot` there; render with `dot -Tsvg g2.dot`.
//
//     cargo run --example figure_dot -- /tmp/fig

use std::error::Error;
use std::path::PathBuf;

use extremal_sf::io::export_dot;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(None)
}

fn run(arg: Option<String>) -> Result<(), Box<dyn Error>> {
    let dir = arg.map(PathBuf::from);
    for t in 0..=2 {
        let dot = export_dot(t)?;
        match &dir {
            Some(d) => {
                std::fs::create_dir_all(d)?;
                let path = d.join(format!("g{t}.dot"));
                std::fs::write(&path, &dot)?;
                println!("wrote {}", path.display());
            }
            None => print!("{dot}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run(std::env::args().nth(1))
}
