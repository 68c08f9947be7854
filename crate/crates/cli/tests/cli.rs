use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn cotree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cotree")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generated(dir: &Path, family: &str) -> PathBuf {
    let path = dir.join(format!("{family}.graph"));
    let o = cotree(&["generate", family, "-o", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn solve_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "example");
    let g = g.to_str().unwrap();
    let o = cotree(&["solve", g, "--dump-wood", "--dump-opp"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for header in ["tree:", "cotree:", "certificate:", "wood:", "opp:", "dual-opp:"] {
        assert!(text.lines().any(|l| l == header), "missing {header}");
    }
    assert!(!text.contains("FAIL"));
    let solution = dir.path().join("solution.txt");
    fs::write(&solution, &text).unwrap();
    let s = solution.to_str().unwrap();
    let o = cotree(&["verify", g, "--tree", s, "--cotree", s]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn solve_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "triangulation-60-s7");
    let g = g.to_str().unwrap();
    let a = cotree(&["solve", g, "--dump-wood"]);
    let b = cotree(&["solve", g, "--dump-wood"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_failures() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "tetrahedron");
    let g = g.to_str().unwrap();
    // a triangle is not a tree
    let o = cotree(&["verify", g, "--tree", "0-1 1-2 2-0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL spanning-tree"));
    // a star at vertex 3 is a tree, but not with degree bound 2
    let o = cotree(&["verify", g, "--tree", "3-0 3-1 3-2", "--bound", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL degree-bound"));
    let o = cotree(&["verify", g, "--tree", "1-2 2-0 0-3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = cotree(&["verify", g, "--tree", "0-7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(cotree(&[]).status.code(), Some(2));
    assert_eq!(cotree(&["solve"]).status.code(), Some(2));
    assert_eq!(cotree(&["generate", "wheel"]).status.code(), Some(2));
    assert_eq!(cotree(&["solve", "/nonexistent/graph"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "g-5");
    let o = cotree(&["solve", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3-connected"));
}

#[test]
fn corpus_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("small");
    let o = cotree(&["generate", "--profile", "small", "--out-dir", out.to_str().unwrap()]);
    assert!(o.status.success());
    let files = fs::read_dir(&out).unwrap().count();
    assert_eq!(files, 52);
    assert!(out.join("cube.graph").is_file());
}

#[test]
fn oracle_on_k4() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "tetrahedron");
    let o = cotree(&["oracle", g.to_str().unwrap(), "--tree", "1-2 2-0 0-3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("trees 16\n"));
    assert!(text.contains("optimum 2\n"));
    assert!(text.contains("query 2 2\n"));
}

#[test]
fn bench_csv() {
    let o = cotree(&["bench", "--sizes", "100,200,400"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,wall_time");
    assert!(lines[1].starts_with("100,"));
    assert!(lines[4].starts_with("# slope "));
}

#[test]
fn exports() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "cube");
    let g = g.to_str().unwrap();
    let dot = stdout(&cotree(&["export", g]));
    assert!(dot.starts_with("digraph G {"));
    for color in ["red", "green", "blue"] {
        assert!(dot.contains(&format!("color={color}")));
    }
    assert!(dot.contains("style=dashed"));
    let svg = dir.path().join("cube.svg");
    assert!(cotree(&["export", g, "--format", "svg", "-o", svg.to_str().unwrap()]).status.success());
    let svg = fs::read_to_string(svg).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert!(!svg.contains("NaN"));
}
