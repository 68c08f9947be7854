//! One PASS/FAIL line per acceptance criterion. Runs without the test
//! harness so the lines always reach stdout.

mod common;

use std::time::{Duration, Instant};

use cotree::bench::{log_log_slope, run};
use cotree::cotree4::{build_tree_pair, TreePair};
use cotree::format::parse_wood;
use cotree::gen::{corpus, example, gk, Instance, Profile, BENCH_SIZES, EXAMPLE_WOOD};
use cotree::schnyder::{compute_wood, dual_wood, find_clockwise_cycle, minimize, SchnyderWood};
use cotree::verify::{
    check_degrees, check_root_degrees, co_tree_of, dual_edge_list, is_dual_spanning_tree, is_spanning_tree,
    min_max_degree, oracle_best_pair,
};
use cotree::{is_sigma_internally_3_connected, Suspension};

const ORACLE_LIMIT: u128 = 10_000_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(number: usize, name: &str, o: &Outcome) {
    println!("{} {number} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
}

fn first<T: std::fmt::Display>(v: &[T]) -> String {
    v.first().map(|x| format!("; first: {x}")).unwrap_or_default()
}

struct Solved {
    inst: Instance,
    s: Suspension,
    seed: SchnyderWood,
    pair: Result<TreePair, cotree::Error>,
}

fn pipeline(instances: Vec<Instance>) -> (Vec<Solved>, Duration) {
    let start = Instant::now();
    let solved = instances
        .into_iter()
        .map(|inst| {
            let s = Suspension::new(inst.graph.clone(), inst.roots).unwrap();
            let seed = compute_wood(&s).unwrap();
            let pair = build_tree_pair(&s);
            Solved { inst, s, seed, pair }
        })
        .collect();
    (solved, start.elapsed())
}

fn end_to_end(solved: &[Solved], elapsed: Duration) -> Outcome {
    let mut failures = Vec::new();
    for x in solved {
        let g = x.s.graph();
        match &x.pair {
            Err(e) => failures.push(format!("{}: {e}", x.inst.name)),
            Ok(p) => {
                let checks = [
                    is_spanning_tree(g, &p.tree),
                    is_dual_spanning_tree(g, &p.co_tree),
                    check_degrees(g, &p.tree, &p.co_tree, 4),
                ];
                if let Some(c) = checks.iter().find(|c| !c.pass) {
                    failures.push(format!("{}: {c}", x.inst.name));
                } else if co_tree_of(g, &p.tree).ok().as_ref() != Some(&p.co_tree) {
                    failures.push(format!("{}: co-tree is not the dual complement", x.inst.name));
                }
            }
        }
    }
    let max_n = solved.iter().map(|x| x.inst.graph.n()).max().unwrap_or(0);
    Outcome {
        pass: failures.is_empty() && solved.len() >= 200 && elapsed < Duration::from_secs(60),
        detail: format!(
            "{} instances up to n={max_n}, {} failures, {:.1}s{}",
            solved.len(),
            failures.len(),
            elapsed.as_secs_f64(),
            first(&failures)
        ),
    }
}

fn last_vertex(solved: &[Solved]) -> Outcome {
    let mut problems = Vec::new();
    for x in solved {
        if let Ok(p) = &x.pair {
            problems.extend(
                common::last_vertex_problems(&x.s, &p.wood).into_iter().map(|v| format!("{}: {v}", x.inst.name)),
            );
        }
    }
    Outcome { pass: problems.is_empty(), detail: format!("{} violations{}", problems.len(), first(&problems)) }
}

fn minimality(solved: &[Solved]) -> Outcome {
    let mut problems = Vec::new();
    for x in solved {
        let w = match &x.pair {
            Ok(p) => p.wood.clone(),
            Err(_) => minimize(&x.s, &x.seed).unwrap(),
        };
        if find_clockwise_cycle(&x.s, &w).unwrap().is_some() {
            problems.push(format!("{}: minimized wood has a clockwise cycle", x.inst.name));
        }
        let (sd, dw) = dual_wood(&x.s, &w).unwrap();
        if find_clockwise_cycle(&sd.suspension, &dw).unwrap().is_some() {
            problems.push(format!("{}: dual of the minimal wood has a clockwise cycle", x.inst.name));
        }
    }
    let s = Suspension::new(example().unwrap(), [0, 1, 2]).unwrap();
    let fixture = parse_wood(s.graph(), EXAMPLE_WOOD).unwrap();
    let fixture_cycle = find_clockwise_cycle(&s, &fixture).unwrap().is_some();
    if !fixture_cycle {
        problems.push("example wood has no clockwise cycle".into());
    }
    Outcome {
        pass: problems.is_empty(),
        detail: format!(
            "{} woods and their duals, example wood cycle: {fixture_cycle}{}",
            solved.len(),
            first(&problems)
        ),
    }
}

fn root_degrees(solved: &[Solved]) -> Outcome {
    let failures: Vec<String> = solved
        .iter()
        .filter_map(|x| {
            let c = check_root_degrees(&x.s, x.pair.as_ref().ok()?);
            (!c.pass).then(|| format!("{}: {c}", x.inst.name))
        })
        .collect();
    Outcome { pass: failures.is_empty(), detail: format!("{} failures{}", failures.len(), first(&failures)) }
}

/// Returns the outcome and the measured optima.
fn gk_family() -> (Outcome, Vec<(usize, usize)>) {
    let mut optima = Vec::new();
    let mut suspendable = Vec::new();
    for k in 4..=7 {
        let g = gk(k).unwrap();
        let (best, _) = min_max_degree(g.num_faces(), &dual_edge_list(&g), ORACLE_LIMIT).unwrap();
        optima.push((k, best));
        let outer = g.outer_boundary();
        let l = outer.len();
        for a in 0..l {
            for b in 1..l {
                for c in b + 1..l {
                    let roots = [outer[a], outer[(a + b) % l], outer[(a + c) % l]];
                    if is_sigma_internally_3_connected(&g, roots).unwrap() {
                        suspendable.push(format!("G_{k} {roots:?}"));
                    }
                }
            }
        }
    }
    let exact = optima.iter().all(|&(k, best)| best == k.div_ceil(2));
    let measured: Vec<String> =
        optima.iter().map(|(k, b)| format!("k={k}: {b} (ceil(k/2)={})", k.div_ceil(2))).collect();
    let outcome = Outcome {
        pass: exact && suspendable.is_empty(),
        detail: format!("{}; suspendable root triples: {}", measured.join(", "), suspendable.len()),
    };
    (outcome, optima)
}

fn oracle(solved: &[Solved]) -> Outcome {
    let mut problems = Vec::new();
    let (mut checked, mut skipped, mut with_3_3) = (0, 0, 0);
    for x in solved.iter().filter(|x| x.inst.graph.m() <= 64) {
        let Ok(p) = &x.pair else { continue };
        match oracle_best_pair(&x.inst.graph, ORACLE_LIMIT, Some(&p.tree)) {
            Ok(r) => {
                checked += 1;
                with_3_3 += r.has_3_3 as usize;
                if r.optimum > 4 {
                    problems.push(format!("{}: optimum {}", x.inst.name, r.optimum));
                }
                if !r.query.is_some_and(|(a, b)| a <= 4 && b <= 4) || r.pairs_within_4 == 0 {
                    problems.push(format!("{}: pipeline pair {:?} not among the oracle pairs", x.inst.name, r.query));
                }
            }
            Err(_) => skipped += 1,
        }
    }
    Outcome {
        pass: problems.is_empty() && checked > 0,
        detail: format!(
            "{checked} instances enumerated, {skipped} over the limit, 3/3 pairs exist on {with_3_3}{}",
            first(&problems)
        ),
    }
}

fn structure(solved: &[Solved]) -> Outcome {
    let mut problems = Vec::new();
    let mut woods = 0;
    for x in solved {
        let mut ws = vec![&x.seed];
        if let Ok(p) = &x.pair {
            ws.push(&p.wood);
        }
        for w in ws {
            woods += 1;
            problems.extend(common::structural_problems(&x.s, w).into_iter().map(|v| format!("{}: {v}", x.inst.name)));
        }
    }
    Outcome {
        pass: problems.is_empty(),
        detail: format!("{woods} woods, {} problems{}", problems.len(), first(&problems)),
    }
}

fn complexity() -> Outcome {
    let timings = run(&BENCH_SIZES, 0).unwrap();
    let slope = log_log_slope(&timings);
    let largest = timings.last().unwrap();
    let table: Vec<String> = timings.iter().map(|t| format!("{}:{:.2}s", t.n, t.seconds)).collect();
    Outcome {
        pass: slope <= 2.3 && largest.n == 20000 && largest.seconds < 120.0,
        detail: format!("slope {slope:.2}, {}", table.join(" ")),
    }
}

fn main() {
    let mut instances = corpus(Profile::Small).unwrap();
    instances.extend(corpus(Profile::Medium).unwrap());
    let (solved, elapsed) = pipeline(instances);
    let small = corpus(Profile::Small).unwrap().len();

    let (gk_outcome, gk_optima) = gk_family();
    let outcomes = [
        ("end-to-end tree pairs", end_to_end(&solved, elapsed)),
        ("last path vertex property", last_vertex(&solved)),
        ("minimality", minimality(&solved)),
        ("root degrees", root_degrees(&solved)),
        ("G_k dual trees", gk_outcome),
        ("oracle consistency", oracle(&solved[..small])),
        ("structural suites", structure(&solved)),
        ("complexity", complexity()),
    ];
    for (i, (name, o)) in outcomes.iter().enumerate() {
        report(i + 1, name, o);
    }

    // The G_k line asks for exactly ceil(k/2). The dual of G_k is K_{2,k}
    // with doubled edges: any spanning tree has k + 1 edges, all at the two
    // hubs, so one hub has degree at least ceil((k + 1) / 2). That exceeds
    // ceil(k/2) for even k, so the line above reports FAIL for k = 4, 6.
    // Here we check that the measured optima are the true ones instead.
    assert!(gk_optima.iter().all(|&(k, best)| best == (k + 2) / 2), "{gk_optima:?}");
    let unexpected: Vec<&str> =
        outcomes.iter().enumerate().filter(|(i, (_, o))| !o.pass && *i != 4).map(|(_, (name, _))| *name).collect();
    assert!(unexpected.is_empty(), "failed: {unexpected:?}");
}
