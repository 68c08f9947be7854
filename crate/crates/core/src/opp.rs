//! Ordered path partitions compatible with a Schnyder wood.
//!
//! For a color `j` the partition consists of the maximal paths whose edges
//! are bidirected `j`/`(j+1)`-colored. Each path is stored as `v_1 .. v_k`
//! where `v_1 v_2` leaves `v_1` in color `j`. The contour `C_i` of the first
//! `i + 1` paths is the clockwise outer walk of `G[V_i]` from `r_{j+1}` to
//! `r_j`; the first path is stored in that order too.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::{self, Write};

use crate::color::Color;
use crate::error::{Error, Result};
use crate::plane_graph::{edge_of, twin, Dart, EdgeId, PlaneGraph, Vertex};
use crate::schnyder::{find_clockwise_cycle, SchnyderWood};
use crate::suspension::Suspension;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPathPartition {
    /// The color `j`; the base pair is `(r_j, r_{j+1})`.
    pub color: Color,
    pub base: (Vertex, Vertex),
    pub paths: Vec<Vec<Vertex>>,
    /// `(v_0, v_{k+1})` for every path but the first.
    pub neighbors: Vec<Option<(Vertex, Vertex)>>,
    /// Index of the path containing each vertex.
    pub path_of: Vec<usize>,
    /// Edges each path covers, in contour order.
    pub covered_edges: Vec<Vec<EdgeId>>,
    /// Vertices each path covers, in contour order.
    pub covered_vertices: Vec<Vec<Vertex>>,
    /// The path covering each edge, if any.
    pub edge_covered_by: Vec<Option<usize>>,
}

/// A path together with its two attachment vertices on the previous contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extension {
    pub left: Vertex,
    pub right: Vertex,
    pub left_edge: EdgeId,
    pub right_edge: EdgeId,
}

/// A failed property of an ordered path partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OppViolation {
    pub path: usize,
    pub rule: &'static str,
    pub message: String,
}

impl fmt::Display for OppViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path {}: {}: {}", self.path, self.rule, self.message)
    }
}

fn violation(path: usize, rule: &'static str, message: String) -> OppViolation {
    OppViolation { path, rule, message }
}

/// Outgoing dart of every color at every vertex.
fn out_table(g: &PlaneGraph, wood: &SchnyderWood) -> Vec<[Option<Dart>; 3]> {
    let mut out = vec![[None; 3]; g.n()];
    for d in 0..g.num_darts() {
        if let Some(c) = wood.color_along(d) {
            out[g.tail(d)][c.index() - 1] = Some(d);
        }
    }
    out
}

/// Whether `d` is `j`-colored and its twin `(j+1)`-colored.
fn is_path_dart(wood: &SchnyderWood, j: Color, d: Dart) -> bool {
    wood.color_along(d) == Some(j) && wood.color_along(twin(d)) == Some(j.next())
}

/// The maximal `j`/`(j+1)`-colored paths, each oriented `v_1 .. v_k`.
pub fn maximal_paths(s: &Suspension, wood: &SchnyderWood, j: Color) -> Result<Vec<Vec<Vertex>>> {
    let g = s.graph();
    let out = out_table(g, wood);
    let out_j = |v: Vertex| out[v][j.index() - 1].filter(|&d| is_path_dart(wood, j, d));
    // the (j+1)-colored direction of a path edge points back to v_l
    let has_pred = |v: Vertex| out[v][j.next().index() - 1].is_some_and(|d| is_path_dart(wood, j, twin(d)));
    let mut seen = vec![false; g.n()];
    let mut paths = Vec::new();
    for v in 0..g.n() {
        if has_pred(v) {
            continue;
        }
        let mut path = vec![v];
        seen[v] = true;
        let mut x = v;
        while let Some(d) = out_j(x) {
            x = g.head(d);
            if seen[x] {
                return Err(Error::InvalidWood(format!("{j}-{}-colored edges close a cycle at {x}", j.next())));
            }
            seen[x] = true;
            path.push(x);
        }
        paths.push(path);
    }
    if let Some(v) = seen.iter().position(|&b| !b) {
        return Err(Error::InvalidWood(format!("vertex {v} lies on a {j}-{}-colored cycle", j.next())));
    }
    Ok(paths)
}

/// The partition compatible with `wood` for color `j`. Paths are ordered by
/// a topological sort of reachability along reversed `j` and `(j+1)` arcs
/// and forward `(j+2)` arcs; ties go to the smallest first vertex.
pub fn compatible_opp(s: &Suspension, wood: &SchnyderWood, j: Color) -> Result<OrderedPathPartition> {
    let g = s.graph();
    let raw = maximal_paths(s, wood, j)?;
    let mut raw_of = vec![0usize; g.n()];
    for (p, path) in raw.iter().enumerate() {
        for &v in path {
            raw_of[v] = p;
        }
    }
    let mut succ = vec![Vec::new(); raw.len()];
    let mut indeg = vec![0usize; raw.len()];
    for d in 0..g.num_darts() {
        let Some(c) = wood.color_along(d) else { continue };
        let (a, b) = (raw_of[g.tail(d)], raw_of[g.head(d)]);
        if a == b {
            continue;
        }
        let (from, to) = if c == j.prev() { (a, b) } else { (b, a) };
        succ[from].push(to);
        indeg[to] += 1;
    }
    let mut ready: BinaryHeap<Reverse<(Vertex, usize)>> =
        (0..raw.len()).filter(|&p| indeg[p] == 0).map(|p| Reverse((raw[p][0], p))).collect();
    let mut order = Vec::with_capacity(raw.len());
    while let Some(Reverse((_, p))) = ready.pop() {
        order.push(p);
        for &q in &succ[p] {
            indeg[q] -= 1;
            if indeg[q] == 0 {
                ready.push(Reverse((raw[q][0], q)));
            }
        }
    }
    if order.len() != raw.len() {
        return Err(Error::CycleInOrderGraph);
    }
    let paths: Vec<Vec<Vertex>> = order.into_iter().map(|p| raw[p].clone()).collect();
    build(s, wood, j, paths)
}

/// Lays the paths down one by one, tracking the contour as a linked list.
fn build(s: &Suspension, wood: &SchnyderWood, j: Color, paths: Vec<Vec<Vertex>>) -> Result<OrderedPathPartition> {
    let g = s.graph();
    let (rj, rj1) = (s.root(j), s.root(j.next()));
    let out = out_table(g, wood);
    let mut path_of = vec![usize::MAX; g.n()];
    for (i, p) in paths.iter().enumerate() {
        for &v in p {
            path_of[v] = i;
        }
    }
    let first = &paths[0];
    if first.first() != Some(&rj1) || first.last() != Some(&rj) {
        return Err(Error::InvalidWood(format!("first path {first:?} does not run from root {rj1} to root {rj}")));
    }
    let mut next: Vec<Option<(Vertex, Dart)>> = vec![None; g.n()];
    let mut on_contour = vec![false; g.n()];
    for w in first.windows(2) {
        let d = g.find_dart(w[0], w[1]).ok_or_else(|| Error::InvalidWood("first path is not a path".into()))?;
        next[w[0]] = Some((w[1], d));
    }
    for &v in first {
        on_contour[v] = true;
    }
    let mut neighbors = vec![None];
    let mut covered_edges = vec![Vec::new()];
    let mut covered_vertices = vec![Vec::new()];
    let mut edge_covered_by = vec![None; g.m()];
    let mut in_segment = vec![false; g.n()];
    for (i, path) in paths.iter().enumerate().skip(1) {
        let missing = |what: &str| Error::MissingNeighbor(i, format!("{what} of {path:?}"));
        let (v1, vk) = (path[0], *path.last().expect("paths are non-empty"));
        let left_dart = out[v1][j.next().index() - 1].ok_or_else(|| missing("left edge"))?;
        let right_dart = out[vk][j.index() - 1].ok_or_else(|| missing("right edge"))?;
        let (v0, vk1) = (g.head(left_dart), g.head(right_dart));
        if !on_contour[v0] || !on_contour[vk1] || v0 == vk1 {
            return Err(missing("contour attachment"));
        }
        // walk the contour from v0 to v_{k+1}
        let mut seg = vec![v0];
        let mut cov_e = Vec::new();
        let mut x = v0;
        while x != vk1 {
            let (y, d) = next[x].ok_or_else(|| missing("right neighbor after left neighbor"))?;
            cov_e.push(edge_of(d));
            seg.push(y);
            x = y;
        }
        for &v in &seg {
            in_segment[v] = true;
        }
        for &v in path {
            for u in g.neighbors(v) {
                if path_of[u] < i && !in_segment[u] {
                    return Err(Error::MissingNeighbor(i, format!("{v} has neighbor {u} outside its contour segment")));
                }
            }
        }
        for &v in &seg {
            in_segment[v] = false;
        }
        for &e in &cov_e {
            edge_covered_by[e] = Some(i);
        }
        let inner: Vec<Vertex> = seg[1..seg.len() - 1].to_vec();
        for &v in &inner {
            on_contour[v] = false;
            next[v] = None;
        }
        next[v0] = Some((v1, twin(left_dart)));
        for w in path.windows(2) {
            let d = out[w[0]][j.index() - 1].expect("path edges leave in color j");
            next[w[0]] = Some((w[1], d));
        }
        next[vk] = Some((vk1, right_dart));
        for &v in path {
            on_contour[v] = true;
        }
        neighbors.push(Some((v0, vk1)));
        covered_edges.push(cov_e);
        covered_vertices.push(inner);
    }
    Ok(OrderedPathPartition {
        color: j,
        base: (rj, rj1),
        paths,
        neighbors,
        path_of,
        covered_edges,
        covered_vertices,
        edge_covered_by,
    })
}

impl OrderedPathPartition {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Extension of path `i >= 1` as recorded during construction.
    pub fn extension(&self, g: &PlaneGraph, i: usize) -> Option<Extension> {
        let (left, right) = self.neighbors.get(i).copied().flatten()?;
        let path = &self.paths[i];
        Some(Extension {
            left,
            right,
            left_edge: g.find_edge(left, path[0])?,
            right_edge: g.find_edge(*path.last()?, right)?,
        })
    }

    /// Edges of the extension of path `i >= 1`: `v_0 v_1`, the path edges and
    /// `v_k v_{k+1}`, in order.
    pub fn extension_edges(&self, g: &PlaneGraph, i: usize) -> Option<Vec<EdgeId>> {
        let ext = self.extension(g, i)?;
        let mut edges = vec![ext.left_edge];
        for w in self.paths[i].windows(2) {
            edges.push(g.find_edge(w[0], w[1])?);
        }
        edges.push(ext.right_edge);
        Some(edges)
    }

    /// One line per path: `i: v1 ... vk | left=v0 right=vk1`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, p) in self.paths.iter().enumerate() {
            let vs: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            let (l, r) = match self.neighbors[i] {
                Some((l, r)) => (l.to_string(), r.to_string()),
                None => ("-".into(), "-".into()),
            };
            writeln!(out, "{i}: {} | left={l} right={r}", vs.join(" ")).unwrap();
        }
        out
    }
}

/// The clockwise outer walk of `G[set]` starting along dart `start` and
/// ending at `to`. `None` if the walk does not reach `to` or repeats a vertex.
fn outer_walk(g: &PlaneGraph, set: &[bool], start: Dart, to: Vertex) -> Option<Vec<Vertex>> {
    let next_in = |d: Dart| {
        let mut x = g.cw_next(d);
        while !set[g.head(x)] {
            x = g.cw_next(x);
        }
        x
    };
    let mut seen = vec![false; g.n()];
    let mut walk = vec![g.tail(start)];
    seen[g.tail(start)] = true;
    let mut d = start;
    for _ in 0..g.num_darts() {
        let v = g.head(d);
        if seen[v] {
            return None;
        }
        seen[v] = true;
        walk.push(v);
        if v == to {
            return Some(walk);
        }
        d = next_in(twin(d));
    }
    None
}

/// The contour `C_i`, recomputed from scratch. `None` if it is not a path.
pub fn contour(s: &Suspension, opp: &OrderedPathPartition, i: usize) -> Option<Vec<Vertex>> {
    let g = s.graph();
    let (rj, rj1) = opp.base;
    let mut set = vec![false; g.n()];
    for p in &opp.paths[..=i] {
        for &v in p {
            set[v] = true;
        }
    }
    if !set[rj] || !set[rj1] {
        return None;
    }
    // leave r_{j+1} along the first retained dart clockwise after the
    // outer-face dart arriving from the first path
    let outer = g.face_boundary(g.outer_face());
    let back = twin(outer.iter().copied().find(|&d| g.head(d) == rj1)?);
    if !set[g.head(back)] {
        return None;
    }
    let mut x = g.cw_next(back);
    while !set[g.head(x)] {
        x = g.cw_next(x);
    }
    outer_walk(g, &set, x, rj)
}

/// Attachment vertices of path `i >= 1` recomputed from the contour `C_{i-1}`:
/// its neighbors closest to `r_{j+1}` and to `r_j`.
pub fn extension(s: &Suspension, opp: &OrderedPathPartition, i: usize) -> Result<Extension> {
    let g = s.graph();
    let prev =
        contour(s, opp, i - 1).ok_or_else(|| Error::MissingNeighbor(i, "previous contour is not a path".into()))?;
    let path = &opp.paths[i];
    let mut pos = vec![usize::MAX; g.n()];
    for (k, &v) in prev.iter().enumerate() {
        pos[v] = k;
    }
    let attach = |v: Vertex| g.neighbors(v).filter(|&u| pos[u] != usize::MAX).map(|u| (pos[u], u)).collect::<Vec<_>>();
    let left = attach(path[0]).into_iter().min().map(|(_, u)| u);
    let right = attach(*path.last().expect("non-empty")).into_iter().max().map(|(_, u)| u);
    let all: Vec<(usize, Vertex)> = path.iter().flat_map(|&v| attach(v)).collect();
    let (Some(left), Some(right)) = (left, right) else {
        return Err(Error::MissingNeighbor(i, format!("{path:?} has no neighbor on the contour")));
    };
    let lo = all.iter().min().expect("non-empty").1;
    let hi = all.iter().max().expect("non-empty").1;
    if lo != left || hi != right || left == right {
        return Err(Error::MissingNeighbor(
            i,
            format!("extreme contour neighbors {lo}, {hi} are not attached to the path ends"),
        ));
    }
    Ok(Extension {
        left,
        right,
        left_edge: g.find_edge(left, path[0]).expect("adjacent"),
        right_edge: g.find_edge(*path.last().expect("non-empty"), right).expect("adjacent"),
    })
}

/// The conditions of an ordered path partition with base pair
/// `(r_j, r_{j+1})`, with every contour recomputed from scratch. Also checks
/// that the paths partition the vertices, are induced, and that the recorded
/// attachment vertices match the contours.
pub fn check_opp(s: &Suspension, opp: &OrderedPathPartition) -> Vec<OppViolation> {
    let g = s.graph();
    let mut out = Vec::new();
    let (rj, rj1) = opp.base;
    let rj2 = s.roots().into_iter().find(|&r| r != rj && r != rj1).expect("three roots");
    let mut owner = vec![usize::MAX; g.n()];
    for (i, p) in opp.paths.iter().enumerate() {
        if p.is_empty() {
            out.push(violation(i, "partition", "empty path".into()));
        }
        for &v in p {
            if owner[v] != usize::MAX {
                out.push(violation(i, "partition", format!("vertex {v} also lies on path {}", owner[v])));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        out.push(violation(0, "partition", format!("vertex {v} lies on no path")));
    }
    if !out.is_empty() {
        return out;
    }
    for (i, p) in opp.paths.iter().enumerate() {
        for (a, &v) in p.iter().enumerate() {
            for (b, &u) in p.iter().enumerate().skip(a + 1) {
                let adjacent = g.find_edge(v, u).is_some();
                if adjacent != (b == a + 1) {
                    let what = if adjacent { "has chord" } else { "misses edge" };
                    out.push(violation(i, "induced", format!("{what} {v}-{u}")));
                }
            }
        }
    }
    let outer = g.outer_boundary();
    let start = outer.iter().position(|&v| v == rj).expect("root on outer face");
    let mut bottom: Vec<Vertex> = Vec::new();
    for k in 0..outer.len() {
        let v = outer[(start + k) % outer.len()];
        bottom.push(v);
        if v == rj1 {
            break;
        }
    }
    bottom.reverse();
    if opp.paths[0] != bottom {
        out.push(violation(0, "first-path", format!("{:?} is not the outer path {bottom:?}", opp.paths[0])));
    }
    let s_idx = opp.paths.len() - 1;
    if opp.paths[s_idx] != [rj2] {
        out.push(violation(s_idx, "last-path", format!("{:?} is not the root {rj2}", opp.paths[s_idx])));
    }
    let mut in_v = vec![false; g.n()];
    for i in 0..s_idx {
        for &v in &opp.paths[i] {
            in_v[v] = true;
        }
        for &v in &opp.paths[i] {
            if g.neighbors(v).all(|u| in_v[u]) {
                out.push(violation(i, "neighbor-above", format!("{v} has no neighbor on a later path")));
            }
        }
        let Some(c) = contour(s, opp, i) else {
            out.push(violation(i, "contour-path", "contour is not a path".into()));
            continue;
        };
        for &v in &c {
            let hits = g.neighbors(v).filter(|&u| owner[u] == i + 1).count();
            if hits > 1 {
                out.push(violation(i + 1, "one-neighbor", format!("contour vertex {v} has {hits} neighbors on it")));
            }
        }
    }
    for i in 1..opp.paths.len() {
        match extension(s, opp, i) {
            Ok(ext) if opp.neighbors[i] != Some((ext.left, ext.right)) => out.push(violation(
                i,
                "attachments",
                format!("recorded {:?}, contour gives ({}, {})", opp.neighbors[i], ext.left, ext.right),
            )),
            Ok(_) => {}
            Err(e) => out.push(violation(i, "attachments", e.to_string())),
        }
    }
    out
}

/// Whether the paths are the maximal `j`/`(j+1)`-colored paths of `wood`,
/// oriented as documented, in an order extending reachability.
pub fn check_compatible(s: &Suspension, wood: &SchnyderWood, opp: &OrderedPathPartition) -> Vec<OppViolation> {
    let g = s.graph();
    let mut out = Vec::new();
    let mut expected = match maximal_paths(s, wood, opp.color) {
        Ok(p) => p,
        Err(e) => return vec![violation(0, "maximal-paths", e.to_string())],
    };
    let mut got = opp.paths.clone();
    expected.sort();
    got.sort();
    if expected != got {
        out.push(violation(0, "maximal-paths", "paths differ from the maximal two-colored paths".into()));
        return out;
    }
    let j = opp.color;
    for d in 0..g.num_darts() {
        let Some(c) = wood.color_along(d) else { continue };
        let (a, b) = (opp.path_of[g.tail(d)], opp.path_of[g.head(d)]);
        let (before, after) = if c == j.prev() { (a, b) } else { (b, a) };
        if before > after {
            out.push(violation(
                after,
                "order",
                format!("{c}-colored arc {}->{} runs against the order", g.tail(d), g.head(d)),
            ));
        }
    }
    out
}

/// Structural facts about each path `P_i`, `i >= 1`, of a compatible
/// partition:
/// * its neighbors among earlier paths lie on `C_{i-1}` between `v_0` and
///   `v_{k+1}`,
/// * `v_0 v_1` and `v_k v_{k+1}` are edges,
/// * `v_0 v_1` leaves `v_1` in color `j+1` and `v_k v_{k+1}` leaves `v_k` in
///   color `j`,
/// * every other edge to an earlier path is unidirected, `(j+2)`-colored,
///   points into `P_i` and avoids `v_0` and `v_{k+1}`,
/// * every vertex of `P_i` lies on `C_i`.
pub fn check_extensions(s: &Suspension, wood: &SchnyderWood, opp: &OrderedPathPartition) -> Vec<OppViolation> {
    let g = s.graph();
    let j = opp.color;
    let mut out = Vec::new();
    for i in 1..opp.paths.len() {
        let path = &opp.paths[i];
        let Some((v0, vk1)) = opp.neighbors[i] else {
            out.push(violation(i, "extension", "no attachment vertices".into()));
            continue;
        };
        let (v1, vk) = (path[0], *path.last().expect("non-empty"));
        let Some(prev) = contour(s, opp, i - 1) else {
            out.push(violation(i, "between", "previous contour is not a path".into()));
            continue;
        };
        let pos = |x: Vertex| prev.iter().position(|&u| u == x);
        let (Some(lo), Some(hi)) = (pos(v0), pos(vk1)) else {
            out.push(violation(i, "between", format!("{v0} or {vk1} is not on the previous contour")));
            continue;
        };
        for &v in path {
            for d in g.rotation(v).iter().copied() {
                let x = g.head(d);
                if opp.path_of[x] >= i {
                    continue;
                }
                match pos(x) {
                    Some(p) if lo <= p && p <= hi => {}
                    _ => out.push(violation(i, "between", format!("neighbor {x} of {v} is outside the segment"))),
                }
                let is_left = v == v1 && x == v0;
                let is_right = v == vk && x == vk1;
                if is_left || is_right {
                    continue;
                }
                let label = wood.label(edge_of(d));
                let ok = !label.is_bidirected() && wood.color_along(twin(d)) == Some(j.prev()) && x != v0 && x != vk1;
                if !ok {
                    out.push(violation(
                        i,
                        "other-edges",
                        format!("edge {v}-{x} is not unidirected {}-colored into the path", j.prev()),
                    ));
                }
            }
        }
        match g.find_dart(v1, v0) {
            Some(d) if wood.color_along(d) == Some(j.next()) => {}
            Some(_) => out.push(violation(i, "extension-colors", format!("{v1}->{v0} is not {}-colored", j.next()))),
            None => out.push(violation(i, "extension-edges", format!("{v0}-{v1} is not an edge"))),
        }
        match g.find_dart(vk, vk1) {
            Some(d) if wood.color_along(d) == Some(j) => {}
            Some(_) => out.push(violation(i, "extension-colors", format!("{vk}->{vk1} is not {j}-colored"))),
            None => out.push(violation(i, "extension-edges", format!("{vk}-{vk1} is not an edge"))),
        }
        if i + 1 < opp.paths.len() {
            match contour(s, opp, i) {
                Some(c) if path.iter().all(|v| c.contains(v)) => {}
                _ => out.push(violation(i, "on-contour", "path does not lie on its contour".into())),
            }
        }
    }
    out
}

/// For a minimal wood: every edge from `P_i` to an earlier path, other than
/// the two extension edges, is unidirected, `(j+2)`-colored, enters `P_i` at
/// its last vertex `v_k` and avoids `v_0` and `v_{k+1}`. Does not check
/// minimality.
pub fn last_vertex_violations(s: &Suspension, wood: &SchnyderWood, opp: &OrderedPathPartition) -> Vec<OppViolation> {
    let g = s.graph();
    let red = opp.color.prev();
    let mut out = Vec::new();
    for i in 1..opp.paths.len() {
        let path = &opp.paths[i];
        let Some((v0, vk1)) = opp.neighbors[i] else { continue };
        let (v1, vk) = (path[0], *path.last().expect("non-empty"));
        for &v in path {
            for &d in g.rotation(v) {
                let w = g.head(d);
                if opp.path_of[w] >= i || (v == v1 && w == v0) || (v == vk && w == vk1) {
                    continue;
                }
                let ok = !wood.is_bidirected(edge_of(d))
                    && wood.color_along(twin(d)) == Some(red)
                    && v == vk
                    && w != v0
                    && w != vk1;
                if !ok {
                    out.push(violation(
                        i,
                        "last-vertex",
                        format!("edge {v}-{w} is not a unidirected {red}-colored edge into v_k = {vk}"),
                    ));
                }
            }
        }
    }
    out
}

/// [`last_vertex_violations`] after checking that `wood` is minimal.
pub fn check_last_vertex(s: &Suspension, wood: &SchnyderWood, opp: &OrderedPathPartition) -> Result<Vec<OppViolation>> {
    if find_clockwise_cycle(s, wood)?.is_some() {
        return Err(Error::NotMinimalWood);
    }
    Ok(last_vertex_violations(s, wood, opp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{example, platonic, Platonic};
    use crate::schnyder::{compute_wood, minimize};

    fn minimal(s: &Suspension) -> SchnyderWood {
        minimize(s, &compute_wood(s).unwrap()).unwrap()
    }

    #[test]
    fn k4_partition() {
        let s = Suspension::new(platonic(Platonic::Tetrahedron).unwrap(), [0, 1, 2]).unwrap();
        let w = minimal(&s);
        let opp = compatible_opp(&s, &w, Color::Green).unwrap();
        assert_eq!(opp.paths, vec![vec![2, 1], vec![3], vec![0]]);
        assert_eq!(opp.neighbors, vec![None, Some((2, 1)), Some((2, 1))]);
        assert_eq!(opp.path_of, vec![2, 0, 0, 1]);
        assert!(check_opp(&s, &opp).is_empty());
        assert!(check_compatible(&s, &w, &opp).is_empty());
    }

    #[test]
    fn example_contours() {
        let s = Suspension::new(example().unwrap(), [0, 1, 2]).unwrap();
        let w = minimal(&s);
        let opp = compatible_opp(&s, &w, Color::Green).unwrap();
        let last = opp.len() - 1;
        assert_eq!(contour(&s, &opp, 0).unwrap(), opp.paths[0]);
        assert_eq!(contour(&s, &opp, last).unwrap(), vec![2, 0, 1]);
        for i in 1..opp.len() {
            assert_eq!(opp.extension(s.graph(), i).unwrap(), extension(&s, &opp, i).unwrap());
        }
        assert!(check_extensions(&s, &w, &opp).is_empty());
        assert!(check_last_vertex(&s, &w, &opp).unwrap().is_empty());
    }

    #[test]
    fn reordered_paths_are_rejected() {
        let s = Suspension::new(example().unwrap(), [0, 1, 2]).unwrap();
        let w = minimal(&s);
        let mut opp = compatible_opp(&s, &w, Color::Green).unwrap();
        opp.paths.swap(1, 2);
        for (i, p) in opp.paths.iter().enumerate() {
            for &v in p {
                opp.path_of[v] = i;
            }
        }
        assert!(!check_opp(&s, &opp).is_empty());
    }

    #[test]
    fn last_vertex_needs_a_minimal_wood() {
        let s = Suspension::new(example().unwrap(), [0, 1, 2]).unwrap();
        let w = crate::format::parse_wood(s.graph(), crate::gen::EXAMPLE_WOOD).unwrap();
        let opp = compatible_opp(&s, &w, Color::Green).unwrap();
        assert!(matches!(check_last_vertex(&s, &w, &opp), Err(Error::NotMinimalWood)));
    }
}
