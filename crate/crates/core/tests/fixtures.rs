mod common;

use cotree::cotree4::{build_tree_pair, build_tree_pair_from, candidate, index_maximal_subpaths, Rule};
use cotree::format::{parse_wood, write_edge_list};
use cotree::gen::{corpus, example, gk, platonic, Platonic, Profile, EXAMPLE_WOOD};
use cotree::opp::{compatible_opp, OrderedPathPartition};
use cotree::schnyder::{check_wood, compute_wood, dual_wood, find_clockwise_cycle, minimize};
use cotree::verify::{check_root_degrees, dual_edge_list, min_max_degree, oracle_best_pair};
use cotree::{is_sigma_internally_3_connected, Color, PlaneGraph, Suspension};

/// Cycle rank of the edges of `h` inside the first `upto` paths.
fn cycle_rank(g: &PlaneGraph, h: &[bool], opp: &OrderedPathPartition, upto: usize) -> usize {
    let inside = |v: usize| opp.path_of[v] < upto;
    let mut adj = vec![Vec::new(); g.n()];
    let mut edges = 0;
    for (e, (u, v)) in g.edges().enumerate() {
        if h[e] && inside(u) && inside(v) {
            adj[u].push(v);
            adj[v].push(u);
            edges += 1;
        }
    }
    let mut seen = vec![false; g.n()];
    let mut vertices = 0;
    let mut components = 0;
    for start in (0..g.n()).filter(|&v| inside(v)) {
        vertices += 1;
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    edges + components - vertices
}

/// Paths that close a new cycle of `h`, found by comparing cycle ranks.
fn index_maximal_by_rank(g: &PlaneGraph, h: &[bool], opp: &OrderedPathPartition) -> Vec<usize> {
    (1..opp.len()).filter(|&i| cycle_rank(g, h, opp, i + 1) > cycle_rank(g, h, opp, i)).collect()
}

#[test]
fn index_maximal_paths_match_cycle_ranks() {
    let mut checked = 0;
    for inst in corpus(Profile::Small).unwrap() {
        let s = common::suspend(&inst);
        let w = minimize(&s, &compute_wood(&s).unwrap()).unwrap();
        let (sd, dw) = dual_wood(&s, &w).unwrap();
        for (s, w) in [(&s, &w), (&sd.suspension, &dw)] {
            let opp = compatible_opp(s, w, Color::Green).unwrap();
            let h = candidate(s, w).unwrap();
            let fast = index_maximal_subpaths(s.graph(), &h, &opp);
            assert_eq!(fast, index_maximal_by_rank(s.graph(), &h, &opp), "{}", inst.name);
            checked += fast.len();
        }
    }
    assert!(checked > 0);
}

fn k4() -> Suspension {
    Suspension::new(platonic(Platonic::Tetrahedron).unwrap(), [0, 1, 2]).unwrap()
}

#[test]
fn k4_tree_pair() {
    let s = k4();
    let pair = build_tree_pair(&s).unwrap();
    let mut tree: Vec<String> = write_edge_list(s.graph(), &pair.tree).lines().map(String::from).collect();
    tree.sort();
    assert_eq!(tree, ["0 2", "1 2", "1 3"]);
    assert_eq!(pair.tree_max_degree, 2);
    assert!(pair.co_tree_max_degree <= 3);
    assert!(check_root_degrees(&s, &pair).pass);
    // the outer edge r1 r2 is the only primal deletion and is forced by the outer face
    assert_eq!(pair.primal.deletions.len(), 1);
    assert_eq!(pair.primal.deletions[0].rule, Rule::OuterFace);
    assert_eq!(s.graph().endpoints(pair.primal.deletions[0].edge), (0, 1));
}

#[test]
fn example_fixture() {
    let s = Suspension::new(example().unwrap(), [0, 1, 2]).unwrap();
    let w = parse_wood(s.graph(), EXAMPLE_WOOD).unwrap();
    assert_eq!(check_wood(&s, &w), vec![]);
    assert!(common::structural_problems(&s, &w).is_empty());
    assert!(find_clockwise_cycle(&s, &w).unwrap().is_some());
    let min = minimize(&s, &w).unwrap();
    assert_eq!(min, minimize(&s, &compute_wood(&s).unwrap()).unwrap());
    assert!(common::last_vertex_problems(&s, &min).is_empty());
    let pair = build_tree_pair_from(&s, min).unwrap();
    assert!(pair.tree_max_degree <= 4 && pair.co_tree_max_degree <= 4);
}

#[test]
fn gk_is_never_suspendable() {
    for k in 4..=7 {
        let g = gk(k).unwrap();
        assert_eq!((g.n(), g.m(), g.num_faces()), (2 * k, 3 * k, k + 2));
        let outer = g.outer_boundary();
        let l = outer.len();
        for a in 0..l {
            for b in 1..l {
                for c in b + 1..l {
                    let roots = [outer[a], outer[(a + b) % l], outer[(a + c) % l]];
                    assert!(!is_sigma_internally_3_connected(&g, roots).unwrap(), "G_{k} with {roots:?}");
                }
            }
        }
    }
}

#[test]
fn gk_dual_tree_degree() {
    // the dual is K_{2,k} with doubled edges to the outer face; a spanning
    // tree puts k + 1 edges on the two hubs
    for k in 4..=7 {
        let g = gk(k).unwrap();
        let (best, _) = min_max_degree(g.num_faces(), &dual_edge_list(&g), 10_000_000).unwrap();
        assert_eq!(best, (k + 2) / 2, "G_{k}");
    }
}

#[test]
fn pipeline_pairs_are_oracle_pairs() {
    for p in [Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron] {
        let g = platonic(p).unwrap();
        let roots = cotree::gen::default_roots(&g);
        let s = Suspension::new(g.clone(), roots).unwrap();
        let pair = build_tree_pair(&s).unwrap();
        let report = oracle_best_pair(&g, 1_000_000, Some(&pair.tree)).unwrap();
        assert_eq!(report.optimum, 2, "{p:?}");
        assert!(report.has_3_3);
        assert_eq!(report.query, Some((pair.tree_max_degree, pair.co_tree_max_degree)));
    }
}
