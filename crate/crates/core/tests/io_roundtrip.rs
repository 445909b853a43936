use extremal_sf::baseline::{generate_ba, BaConfig};
use extremal_sf::extremal::{build_direct, build_recursive};
use extremal_sf::io::{parse_edge_list, write_edge_list};
use extremal_sf::Graph;
use proptest::prelude::*;

fn roundtrip(g: &Graph) -> Graph {
    let mut buf = Vec::new();
    write_edge_list(&mut buf, g, &[]).unwrap();
    parse_edge_list(std::str::from_utf8(&buf).unwrap()).unwrap()
}

#[test]
fn extremal_family_roundtrips() {
    for t in 0..=12 {
        let d = build_direct(t).unwrap().into_graph();
        assert_eq!(roundtrip(&d), d);
        let r = build_recursive(t).unwrap().into_graph();
        assert_eq!(roundtrip(&r), r);
    }
}

#[test]
fn large_baseline_roundtrips() {
    let g = generate_ba(&BaConfig::new(1 << 16, 2, 11).unwrap()).unwrap();
    assert_eq!(roundtrip(&g), g);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn baseline_roundtrips(n in 3usize..2000, m in 1usize..3, seed: u64) {
        let g = generate_ba(&BaConfig::new(n, m, seed).unwrap()).unwrap();
        prop_assert_eq!(roundtrip(&g), g);
    }
}
