//! Text formats for embedded graphs, woods and edge lists.
//!
//! Graph files:
//!
//! ```text
//! planar 4
//! outer 0 1 2
//! roots 0 1 2
//! 0: 1 3 2
//! ...
//! ```
//!
//! `outer` lists the outer face clockwise, each vertex line its neighbors
//! clockwise. `roots` is optional. Lines starting with `#` are ignored.

use std::fmt::Write;

use crate::color::Color;
use crate::error::{Error, Result};
use crate::plane_graph::{EdgeId, PlaneGraph, Vertex};
use crate::schnyder::{EdgeLabel, SchnyderWood};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>> {
    words.iter().map(|w| w.parse().map_err(|_| parse_err(line, format!("expected a vertex id, got `{w}`")))).collect()
}

/// Content lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// A parsed graph file.
#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: PlaneGraph,
    pub roots: Option<[Vertex; 3]>,
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut n = None;
    let mut outer = None;
    let mut roots = None;
    let mut rotation: Vec<Option<Vec<Vertex>>> = Vec::new();
    for (ln, line) in lines(text) {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words[0] {
            "planar" => {
                let v = numbers(ln, &words[1..])?;
                let [count] = v[..] else { return Err(parse_err(ln, "`planar` takes one count")) };
                n = Some(count);
                rotation = vec![None; count];
            }
            "outer" => outer = Some(numbers(ln, &words[1..])?),
            "roots" => {
                let v = numbers(ln, &words[1..])?;
                let [a, b, c] = v[..] else { return Err(parse_err(ln, "`roots` takes three vertices")) };
                roots = Some([a, b, c]);
            }
            w if w.ends_with(':') => {
                let count = n.ok_or_else(|| parse_err(ln, "vertex line before `planar`"))?;
                let v: usize = w[..w.len() - 1].parse().map_err(|_| parse_err(ln, format!("bad vertex `{w}`")))?;
                if v >= count {
                    return Err(parse_err(ln, format!("vertex {v} out of range")));
                }
                if rotation[v].is_some() {
                    return Err(parse_err(ln, format!("vertex {v} listed twice")));
                }
                rotation[v] = Some(numbers(ln, &words[1..])?);
            }
            w => return Err(parse_err(ln, format!("unknown keyword `{w}`"))),
        }
    }
    n.ok_or_else(|| parse_err(0, "missing `planar` line"))?;
    let outer = outer.ok_or_else(|| parse_err(0, "missing `outer` line"))?;
    let rotation: Vec<Vec<Vertex>> = rotation.into_iter().map(|r| r.unwrap_or_default()).collect();
    let graph = PlaneGraph::from_rotation(&rotation, &outer)?;
    Ok(GraphFile { graph, roots })
}

pub fn write_graph(g: &PlaneGraph, roots: Option<[Vertex; 3]>) -> String {
    let mut out = String::new();
    writeln!(out, "planar {}", g.n()).unwrap();
    let outer: Vec<String> = g.outer_boundary().iter().map(|v| v.to_string()).collect();
    writeln!(out, "outer {}", outer.join(" ")).unwrap();
    if let Some([a, b, c]) = roots {
        writeln!(out, "roots {a} {b} {c}").unwrap();
    }
    for v in 0..g.n() {
        let nbrs: Vec<String> = g.neighbors(v).map(|u| u.to_string()).collect();
        writeln!(out, "{v}: {}", nbrs.join(" ")).unwrap();
    }
    out
}

fn parse_color(line: usize, w: &str) -> Result<Color> {
    w.parse::<usize>()
        .ok()
        .and_then(Color::from_index)
        .ok_or_else(|| parse_err(line, format!("expected a color 1, 2 or 3, got `{w}`")))
}

/// One line per edge: `u v uni <toward> <color>` or
/// `u v bi <color toward u> <color toward v>`.
pub fn parse_wood(g: &PlaneGraph, text: &str) -> Result<SchnyderWood> {
    let mut labels: Vec<Option<EdgeLabel>> = vec![None; g.m()];
    for (ln, line) in lines(text) {
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.len() != 5 {
            return Err(parse_err(ln, "expected `u v uni <toward> <color>` or `u v bi <c_u> <c_v>`"));
        }
        let ends = numbers(ln, &words[..2])?;
        let (u, v) = (ends[0], ends[1]);
        let d = g.find_dart(u, v).ok_or_else(|| parse_err(ln, format!("{u}-{v} is not an edge")))?;
        let e = d / 2;
        let label = match words[2] {
            "uni" => {
                let toward = numbers(ln, &words[3..4])?[0];
                let dart = if toward == v {
                    d
                } else if toward == u {
                    d ^ 1
                } else {
                    return Err(parse_err(ln, format!("{toward} is not an endpoint")));
                };
                EdgeLabel::Uni { dart, color: parse_color(ln, words[4])? }
            }
            "bi" => {
                let to_u = parse_color(ln, words[3])?;
                let to_v = parse_color(ln, words[4])?;
                if d % 2 == 0 {
                    EdgeLabel::Bi { forward: to_v, backward: to_u }
                } else {
                    EdgeLabel::Bi { forward: to_u, backward: to_v }
                }
            }
            w => return Err(parse_err(ln, format!("unknown label `{w}`"))),
        };
        if labels[e].replace(label).is_some() {
            return Err(parse_err(ln, format!("edge {u}-{v} labeled twice")));
        }
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(e, l)| {
            let (u, v) = g.endpoints(e);
            l.ok_or_else(|| parse_err(0, format!("edge {u}-{v} has no label")))
        })
        .collect::<Result<_>>()?;
    Ok(SchnyderWood::new(labels))
}

pub fn write_wood(g: &PlaneGraph, wood: &SchnyderWood) -> String {
    let mut out = String::new();
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        match wood.label(e) {
            EdgeLabel::Uni { dart, color } => writeln!(out, "{u} {v} uni {} {color}", g.head(dart)).unwrap(),
            EdgeLabel::Bi { forward, backward } => writeln!(out, "{u} {v} bi {backward} {forward}").unwrap(),
        }
    }
    out
}

/// Edges given as `u-v` tokens or `u v` pairs, separated by whitespace,
/// commas or newlines.
pub fn parse_edge_list(g: &PlaneGraph, text: &str) -> Result<Vec<EdgeId>> {
    let cleaned: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ")
        .replace([',', '-'], " ");
    let ids = numbers(0, &cleaned.split_whitespace().collect::<Vec<_>>())?;
    if ids.len() % 2 == 1 {
        return Err(parse_err(0, "odd number of endpoints in edge list"));
    }
    ids.chunks(2)
        .map(|p| g.find_edge(p[0], p[1]).ok_or_else(|| parse_err(0, format!("{}-{} is not an edge", p[0], p[1]))))
        .collect()
}

pub fn write_edge_list(g: &PlaneGraph, edges: &[EdgeId]) -> String {
    let mut out = String::new();
    for &e in edges {
        let (u, v) = g.endpoints(e);
        writeln!(out, "{} {}", u.min(v), u.max(v)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "planar 4\nouter 0 1 2\nroots 0 1 2\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n";

    #[test]
    fn graph_round_trip() {
        let f = parse_graph(K4).unwrap();
        assert_eq!((f.graph.n(), f.graph.m(), f.graph.num_faces()), (4, 6, 4));
        assert_eq!(f.roots, Some([0, 1, 2]));
        let again = parse_graph(&write_graph(&f.graph, f.roots)).unwrap();
        assert_eq!(again.graph.rotation_lists(), f.graph.rotation_lists());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let bad = "planar 2\nouter 0 1\n0: 1\nbogus\n";
        assert!(matches!(parse_graph(bad), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_graph("outer 0 1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn edge_lists() {
        let g = parse_graph(K4).unwrap().graph;
        let e = parse_edge_list(&g, "0-1, 1 2\n3-0").unwrap();
        assert_eq!(e.len(), 3);
        assert!(parse_edge_list(&g, "0-9").is_err());
        assert_eq!(parse_edge_list(&g, &write_edge_list(&g, &e)).unwrap(), e);
    }
}
