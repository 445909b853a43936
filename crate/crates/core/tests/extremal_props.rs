use extremal_sf::extremal::{
    build_direct, build_recursive, build_recursive_traced, class_census,
    closed_form_degree_table, order_formula, size_formula, PruneRule, VertexClass,
};

#[test]
fn constructors_agree_through_t10() {
    for t in 0..=10 {
        assert_eq!(build_recursive(t).unwrap(), build_direct(t).unwrap(), "t = {t}");
    }
}

#[test]
fn order_and_size_through_t16() {
    for t in 0..=16 {
        let g = build_direct(t).unwrap();
        assert_eq!(g.graph().order() as u64, order_formula(t).unwrap());
        assert_eq!(g.graph().size() as u64, size_formula(t).unwrap());
    }
}

#[test]
fn hub_sees_everyone() {
    for t in 1..=12 {
        let g = build_direct(t).unwrap();
        let n = g.graph().order();
        let hub = g.hub().unwrap();
        let expected: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
        assert_eq!(g.graph().neighbors(hub).unwrap(), &expected[..]);
    }
}

#[test]
fn every_edge_touches_hub_or_leaf() {
    for t in 1..=10 {
        let g = build_direct(t).unwrap();
        for (u, v) in g.graph().edges() {
            let ok = [u, v]
                .iter()
                .any(|&x| matches!(g.class_of(x), VertexClass::Hub | VertexClass::Leaf));
            assert!(ok, "t = {t}: edge {u}-{v}");
        }
    }
}

#[test]
fn leaf_neighbourhood_is_center_plus_ancestors() {
    for t in 1..=9 {
        let g = build_direct(t).unwrap();
        for leaf in g.vertices_of(VertexClass::Leaf) {
            let addr = g.address_of(leaf);
            // ancestors: every proper prefix of the path
            let mut expected: Vec<usize> = (0..addr.path.len())
                .map(|len| {
                    let value = addr.path.value() >> (addr.path.len() - len);
                    (1usize << len) - 1 + value as usize
                })
                .collect();
            expected.sort_unstable();
            let nbrs = g.graph().neighbors(leaf).unwrap();
            assert_eq!(nbrs, &expected[..]);
            assert_eq!(nbrs.len(), t as usize + 1);
            assert_eq!(g.class_of(*nbrs.last().unwrap()), VertexClass::Center);
        }
    }
}

#[test]
fn pruning_removes_only_non_leaf_edges() {
    let (_, trace) = build_recursive_traced(10, PruneRule::LeafClass).unwrap();
    for step in trace.iter().skip(1) {
        assert!(step.deleted_all_non_leaf, "step {}", step.step);
        assert!(step.kept_all_touch_leaf, "step {}", step.step);
    }
    // deleted per copy at step s: the old hub's edges to all non-leaves,
    // 2^s - 2 of them
    for step in &trace {
        let s = step.step;
        let expected = if s < 2 { 0 } else { (1usize << s) - 2 };
        assert_eq!(step.deleted_per_copy, expected, "step {s}");
    }
}

#[test]
fn histogram_matches_closed_form() {
    for t in 1..=14 {
        assert_eq!(
            build_direct(t).unwrap().graph().degree_histogram(),
            closed_form_degree_table(t).unwrap(),
            "t = {t}"
        );
    }
}

#[test]
fn census_over_range() {
    for t in 1..=12 {
        let c = class_census(&build_direct(t).unwrap()).unwrap();
        assert_eq!(c.hub, 1);
        assert_eq!(c.center, 1 << t);
        assert_eq!(c.leaf, 1 << (t + 1));
        for &(s, count) in &c.active {
            assert_eq!(count, 1 << (t - s));
        }
    }
}

#[test]
fn direct_graphs_satisfy_layout_invariants() {
    for t in 0..=11 {
        assert_eq!(build_direct(t).unwrap().graph().check_invariants(), Ok(()));
    }
}
