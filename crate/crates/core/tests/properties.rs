mod common;

use cotree::cotree4::build_tree_pair_from;
use cotree::gen::{default_roots, random_cubic, random_triangulation, thin};
use cotree::schnyder::{compute_wood, dual_wood, find_clockwise_cycle, minimize};
use cotree::verify::{check_degrees, check_root_degrees, co_tree_of};
use cotree::{PlaneGraph, Suspension};
use proptest::prelude::*;

fn graphs() -> impl Strategy<Value = PlaneGraph> {
    prop_oneof![
        (4usize..80, any::<u64>()).prop_map(|(n, seed)| random_triangulation(n, seed).unwrap()),
        (2usize..30, any::<u64>()).prop_map(|(f, seed)| random_cubic(2 * f, seed).unwrap()),
        (6usize..60, any::<u64>()).prop_map(|(n, seed)| {
            let g = random_triangulation(n, seed).unwrap();
            let roots = default_roots(&g);
            thin(&g, roots, n / 2, seed).unwrap()
        }),
    ]
}

fn suspend(g: PlaneGraph) -> Suspension {
    let roots = default_roots(&g);
    Suspension::new(g, roots).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn seed_woods_are_valid(g in graphs()) {
        let s = suspend(g);
        let w = compute_wood(&s).unwrap();
        let problems = common::structural_problems(&s, &w);
        prop_assert!(problems.is_empty(), "{:?}", problems);
    }

    #[test]
    fn minimal_woods(g in graphs()) {
        let s = suspend(g);
        let w = minimize(&s, &compute_wood(&s).unwrap()).unwrap();
        prop_assert!(common::structural_problems(&s, &w).is_empty());
        prop_assert!(find_clockwise_cycle(&s, &w).unwrap().is_none());
        prop_assert_eq!(&minimize(&s, &w).unwrap(), &w);
        let (sd, dw) = dual_wood(&s, &w).unwrap();
        prop_assert!(find_clockwise_cycle(&sd.suspension, &dw).unwrap().is_none());
        let problems = common::last_vertex_problems(&s, &w);
        prop_assert!(problems.is_empty(), "{:?}", problems);
    }

    #[test]
    fn tree_pairs(g in graphs()) {
        let s = suspend(g);
        let w = minimize(&s, &compute_wood(&s).unwrap()).unwrap();
        let pair = build_tree_pair_from(&s, w).unwrap();
        let g = s.graph();
        prop_assert_eq!(co_tree_of(g, &pair.tree).unwrap(), pair.co_tree.clone());
        let degrees = check_degrees(g, &pair.tree, &pair.co_tree, 4);
        prop_assert!(degrees.pass, "{}", degrees);
        let roots = check_root_degrees(&s, &pair);
        prop_assert!(roots.pass, "{}", roots);
    }
}
