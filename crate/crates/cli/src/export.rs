//! DOT and SVG rendering of a graph with its wood and tree pair.

use std::fmt::Write;

use cotree::cotree4::TreePair;
use cotree::{Color, PlaneGraph, Suspension};

fn color_name(c: Color) -> &'static str {
    match c {
        Color::Red => "red",
        Color::Green => "green",
        Color::Blue => "blue",
    }
}

/// Wood arcs colored by tree; tree edges bold, co-tree edges as dashed arcs
/// between face nodes `f<i>`.
pub fn dot(s: &Suspension, pair: &TreePair) -> String {
    let g = s.graph();
    let mut in_tree = vec![false; g.m()];
    for &e in &pair.tree {
        in_tree[e] = true;
    }
    let mut out = String::from("digraph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for f in 0..g.num_faces() {
        writeln!(out, "  f{f} [shape=point];").unwrap();
    }
    for e in 0..g.m() {
        let width = if in_tree[e] { 3 } else { 1 };
        for d in [2 * e, 2 * e + 1] {
            if let Some(c) = pair.wood.color_along(d) {
                writeln!(out, "  {} -> {} [color={}, penwidth={width}];", g.tail(d), g.head(d), color_name(c)).unwrap();
            }
        }
    }
    for &e in &pair.co_tree {
        let (a, b) = (g.left_face(2 * e), g.right_face(2 * e));
        writeln!(out, "  f{a} -> f{b} [dir=none, style=dashed, color=gray];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Outer face on a circle, every other vertex at the average of its
/// neighbors.
pub fn tutte_layout(g: &PlaneGraph) -> Vec<(f64, f64)> {
    let outer = g.outer_boundary();
    let mut pos = vec![(0.0, 0.0); g.n()];
    let mut fixed = vec![false; g.n()];
    let k = outer.len() as f64;
    for (i, &v) in outer.iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / k - std::f64::consts::FRAC_PI_2;
        pos[v] = (a.cos(), a.sin());
        fixed[v] = true;
    }
    for _ in 0..5000 {
        let mut moved: f64 = 0.0;
        for v in (0..g.n()).filter(|&v| !fixed[v]) {
            let deg = g.degree(v) as f64;
            let (sx, sy) = g.neighbors(v).fold((0.0, 0.0), |(x, y), u| (x + pos[u].0, y + pos[u].1));
            let p = (sx / deg, sy / deg);
            moved = moved.max((p.0 - pos[v].0).abs() + (p.1 - pos[v].1).abs());
            pos[v] = p;
        }
        if moved < 1e-10 {
            break;
        }
    }
    pos
}

pub fn svg(s: &Suspension, pair: &TreePair) -> String {
    let g = s.graph();
    const SIZE: f64 = 600.0;
    let pos: Vec<(f64, f64)> =
        tutte_layout(g).into_iter().map(|(x, y)| (SIZE / 2.0 + x * 250.0, SIZE / 2.0 + y * 250.0)).collect();
    let face_point = |f: usize| {
        if f == g.outer_face() {
            return (SIZE - 15.0, 15.0);
        }
        let vs = g.face_vertices(f);
        let k = vs.len() as f64;
        vs.iter().fold((0.0, 0.0), |(x, y), &v| (x + pos[v].0 / k, y + pos[v].1 / k))
    };
    let mut in_tree = vec![false; g.m()];
    for &e in &pair.tree {
        in_tree[e] = true;
    }
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        let (width, stroke) = if in_tree[e] { (4, "black") } else { (1, "#bbbbbb") };
        writeln!(
            out,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="{stroke}" stroke-width="{width}"/>"#,
            pos[u].0, pos[u].1, pos[v].0, pos[v].1
        )
        .unwrap();
    }
    for &e in &pair.co_tree {
        let (a, b) = (face_point(g.left_face(2 * e)), face_point(g.right_face(2 * e)));
        writeln!(
            out,
            r##"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#d62728" stroke-width="2" stroke-dasharray="6,4"/>"##,
            a.0, a.1, b.0, b.1
        )
        .unwrap();
    }
    for (v, p) in pos.iter().enumerate() {
        writeln!(out, r#"<circle cx="{:.1}" cy="{:.1}" r="9" fill="white" stroke="black"/>"#, p.0, p.1).unwrap();
        writeln!(out, r#"<text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle">{v}</text>"#, p.0, p.1 + 3.5)
            .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
