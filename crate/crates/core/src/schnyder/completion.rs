use std::collections::{HashMap, HashSet, VecDeque};

use crate::color::Color;
use crate::error::{Error, Result};
use crate::plane_graph::{edge_of, twin, Dart, EdgeId, FaceId, PlaneGraph, Vertex};
use crate::suspension::Suspension;

use super::dual::{apexed_label, dual_wood};
use super::wood::{EdgeLabel, SchnyderWood};

/// What a vertex of the completion stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Primal(Vertex),
    /// Common endpoint of the six outer half-edges.
    Apex,
    /// A face of the apex-augmented graph: an inner face of `G` or one of
    /// `b1, b2, b3`.
    Dual(FaceId),
    /// Subdivides edge `e` of the apex-augmented graph and its dual.
    Crossing(EdgeId),
}

/// The completion of a suspension with a wood: primal and suspended dual
/// superimposed, every crossing pair subdivided. The six outer half-edges
/// (three rays, three half-edges of the outer pieces) end in a common apex
/// so that the completion is an ordinary plane graph.
///
/// Each crossing contributes four arms with ids `4e..4e+4`, leading to the
/// tail, the left face, the head and the right face of dart `2e` in that
/// clockwise order. The three arms `4(m+3)+k` join `b_{k+1}` to the apex.
#[derive(Debug, Clone)]
pub struct Completion {
    graph: PlaneGraph,
    n: usize,
    num_faces: usize,
    num_edges: usize,
    /// Per arm, the dart it is oriented along.
    dir: Vec<Dart>,
    color: Vec<Color>,
    apex_faces: HashSet<FaceId>,
}

impl Completion {
    /// The completion with every arm oriented into its crossing vertex and
    /// colored red; orientation and colors are filled in by the callers.
    pub(crate) fn skeleton(s: &Suspension) -> Result<Completion> {
        let sd = s.suspended_dual();
        let ga = &sd.apexed.graph;
        let n = s.graph().n();
        let me = ga.m();
        let nf = ga.num_faces();
        let apex = n;
        let broots = sd.suspension.roots();
        let dual_node = |f: FaceId| n + 1 + f;
        let cross = |e: EdgeId| n + 1 + nf + e;
        let arms = 4 * me + 3;

        let mut head = vec![0; 2 * arms];
        for e in 0..me {
            let d = 2 * e;
            let ends = [ga.tail(d), dual_node(ga.left_face(d)), ga.head(d), dual_node(ga.right_face(d))];
            for (k, &x) in ends.iter().enumerate() {
                head[2 * (4 * e + k)] = x;
                head[2 * (4 * e + k) + 1] = cross(e);
            }
        }
        for (k, &b) in broots.iter().enumerate() {
            head[2 * (4 * me + k)] = apex;
            head[2 * (4 * me + k) + 1] = dual_node(b);
        }

        let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); n + 1 + nf + me];
        for (x, rot) in rotation.iter_mut().enumerate().take(n + 1) {
            for &d in ga.rotation(x) {
                let arm = 4 * edge_of(d) + if d % 2 == 0 { 0 } else { 2 };
                rot.push(2 * arm + 1);
                if x == apex {
                    let k = broots.iter().position(|&b| b == ga.right_face(d)).expect("apex corner is an outer piece");
                    rot.push(2 * (4 * me + k) + 1);
                }
            }
        }
        for f in 0..nf {
            let rot = &mut rotation[dual_node(f)];
            for &b in ga.face_boundary(f).iter().rev() {
                let arm = 4 * edge_of(b) + if b % 2 == 0 { 1 } else { 3 };
                rot.push(2 * arm + 1);
                if ga.tail(b) == apex {
                    let k = broots.iter().position(|&r| r == f).expect("face at apex is an outer piece");
                    rot.push(2 * (4 * me + k));
                }
            }
        }
        for e in 0..me {
            rotation[cross(e)] = (0..4).map(|k| 2 * (4 * e + k)).collect();
        }
        let mut graph = PlaneGraph::from_parts(head, rotation)?;
        let outer = graph.left_face(graph.rotation(apex)[0]);
        graph.set_outer_face(outer);
        let apex_faces = graph.rotation(apex).iter().map(|&d| graph.left_face(d)).collect();

        let dir = (0..arms).map(|a| 2 * a + 1).collect();
        let color = vec![Color::Red; arms];
        Ok(Completion { graph, n, num_faces: nf, num_edges: me, dir, color, apex_faces })
    }

    pub fn new(s: &Suspension, wood: &SchnyderWood) -> Result<Completion> {
        let (_, dual) = dual_wood(s, wood)?;
        let mut c = Completion::skeleton(s)?;
        let m = s.graph().m();
        let me = c.num_edges;
        let Completion { dir, color, .. } = &mut c;
        let mut set = |arm: usize, from_z: Option<Color>, into_z: Option<Color>| {
            // prefer the direction into the crossing vertex
            match (into_z, from_z) {
                (Some(c), _) => {
                    dir[arm] = 2 * arm + 1;
                    color[arm] = c;
                }
                (None, Some(c)) => {
                    dir[arm] = 2 * arm;
                    color[arm] = c;
                }
                (None, None) => unreachable!("every edge carries a direction"),
            }
        };
        for e in 0..me {
            let p = apexed_label(wood, m, e);
            let (pf, pb) = (p.color_along(2 * e), p.color_along(2 * e + 1));
            set(4 * e, pb, pf);
            set(4 * e + 2, pf, pb);
            // dual dart 2e runs from the right face to the left face
            let q = dual.label(e);
            let (qf, qb) = (q.color_along(2 * e), q.color_along(2 * e + 1));
            set(4 * e + 3, qb, qf);
            set(4 * e + 1, qf, qb);
        }
        for k in 0..3 {
            dir[4 * me + k] = 2 * (4 * me + k);
            color[4 * me + k] = Color::ALL[k];
        }
        Ok(c)
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn node(&self, x: Vertex) -> Node {
        if x < self.n {
            Node::Primal(x)
        } else if x == self.n {
            Node::Apex
        } else if x < self.n + 1 + self.num_faces {
            Node::Dual(x - self.n - 1)
        } else {
            Node::Crossing(x - self.n - 1 - self.num_faces)
        }
    }

    pub fn apex(&self) -> Vertex {
        self.n
    }

    /// The dart an arm is oriented along, and its color.
    pub fn arc(&self, arm: EdgeId) -> (Dart, Color) {
        (self.dir[arm], self.color[arm])
    }

    pub fn is_out(&self, d: Dart) -> bool {
        self.dir[edge_of(d)] == d
    }

    /// Prescribed outdegree: 3 at primal and dual vertices, 1 at crossings,
    /// 0 at the apex.
    pub fn alpha(&self, x: Vertex) -> usize {
        match self.node(x) {
            Node::Primal(_) | Node::Dual(_) => 3,
            Node::Crossing(_) => 1,
            Node::Apex => 0,
        }
    }

    pub fn outdegree(&self, x: Vertex) -> usize {
        self.graph.rotation(x).iter().filter(|&&d| self.is_out(d)).count()
    }

    /// Crossing vertices must have one outgoing arm and three incoming arms
    /// colored red, green and blue counterclockwise.
    pub fn crossing_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for e in 0..self.num_edges {
            let z = self.n + 1 + self.num_faces + e;
            let rot = self.graph.rotation(z);
            let outs: Vec<usize> = (0..4).filter(|&i| self.is_out(rot[i])).collect();
            if outs.len() != 1 {
                out.push(format!("crossing of edge {e} has {} outgoing arms", outs.len()));
                continue;
            }
            let o = outs[0];
            // counterclockwise from the outgoing arm
            let ccw: Vec<Color> = (1..4).map(|t| self.color[edge_of(rot[(o + 4 - t) % 4])]).collect();
            if ccw[1] != ccw[0].next() || ccw[2] != ccw[1].next() {
                out.push(format!("crossing of edge {e} has incoming colors {ccw:?} counterclockwise"));
            }
        }
        out
    }

    /// Vertices whose outdegree differs from the prescription.
    pub fn alpha_violations(&self) -> Vec<Vertex> {
        (0..self.graph.n()).filter(|&x| self.outdegree(x) != self.alpha(x)).collect()
    }

    /// For every face, the least number of arcs crossed from their left to
    /// their right side on a walk from the apex. Zero everywhere iff the
    /// completion has no clockwise directed cycle.
    pub fn potentials(&self) -> Vec<u32> {
        let g = &self.graph;
        let start = g.outer_face();
        let mut p = vec![u32::MAX; g.num_faces()];
        p[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &b in g.face_boundary(f) {
                let r = g.right_face(b);
                // crossing the arm from f: costs 1 iff f lies on its left
                let w = if self.dir[edge_of(b)] == b { 1 } else { 0 };
                if p[f] + w < p[r] {
                    p[r] = p[f] + w;
                    if w == 0 {
                        queue.push_front(r);
                    } else {
                        queue.push_back(r);
                    }
                }
            }
        }
        p
    }

    /// Arms whose right face has potential one more than their left face.
    /// Together they form edge-disjoint clockwise and counterclockwise cycles.
    fn level_arcs(&self, p: &[u32]) -> Vec<Dart> {
        let g = &self.graph;
        self.dir.iter().copied().filter(|&d| p[g.right_face(d)] == p[g.left_face(d)] + 1).collect()
    }

    /// Whether the darts form a simple directed cycle of the orientation.
    pub fn is_directed_cycle(&self, cycle: &[Dart]) -> bool {
        if cycle.is_empty() || !cycle.iter().all(|&d| self.is_out(d)) {
            return false;
        }
        let mut seen = HashSet::new();
        cycle.iter().all(|&d| seen.insert(self.graph.tail(d)))
            && (0..cycle.len()).all(|i| self.graph.head(cycle[i]) == self.graph.tail(cycle[(i + 1) % cycle.len()]))
    }

    /// A simple cycle is clockwise iff the region on its right does not
    /// contain the apex. Decided by flooding faces from the right side.
    pub fn is_clockwise(&self, cycle: &[Dart]) -> bool {
        let g = &self.graph;
        let on_cycle: HashSet<EdgeId> = cycle.iter().map(|&d| edge_of(d)).collect();
        let mut seen = HashSet::new();
        let mut stack: Vec<FaceId> = cycle.iter().map(|&d| g.right_face(d)).collect();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            if self.apex_faces.contains(&f) {
                return false;
            }
            for &b in g.face_boundary(f) {
                if !on_cycle.contains(&edge_of(b)) {
                    stack.push(g.right_face(b));
                }
            }
        }
        true
    }

    /// Some clockwise directed cycle, or `None` if there is none.
    pub fn find_clockwise_cycle(&self) -> Option<Vec<Dart>> {
        let p = self.potentials();
        let top = *p.iter().max()?;
        if top == 0 {
            return None;
        }
        let g = &self.graph;
        let arcs: Vec<Dart> = self.level_arcs(&p).into_iter().filter(|&d| p[g.right_face(d)] == top).collect();
        let mut outs: HashMap<Vertex, Vec<Dart>> = HashMap::new();
        for &d in &arcs {
            outs.entry(g.tail(d)).or_default().push(d);
        }
        let mut used = HashSet::new();
        for &start in &arcs {
            if used.contains(&start) {
                continue;
            }
            let mut path: Vec<Dart> = Vec::new();
            let mut on_path: HashMap<Vertex, usize> = HashMap::new();
            let mut a = start;
            loop {
                used.insert(a);
                on_path.insert(g.tail(a), path.len());
                path.push(a);
                let h = g.head(a);
                if let Some(&i) = on_path.get(&h) {
                    let cycle = path.split_off(i);
                    for d in &cycle {
                        on_path.remove(&g.tail(*d));
                    }
                    if self.is_clockwise(&cycle) {
                        return Some(cycle);
                    }
                    if path.is_empty() {
                        break;
                    }
                }
                match outs.get(&h).and_then(|v| v.iter().copied().find(|d| !used.contains(d))) {
                    Some(next) => a = next,
                    None => break,
                }
            }
        }
        None
    }

    pub(crate) fn set_dir(&mut self, arm: EdgeId, d: Dart) {
        debug_assert_eq!(edge_of(d), arm);
        self.dir[arm] = d;
    }

    /// Reverses the given arms. Callers pass unions of directed cycles.
    pub(crate) fn reverse(&mut self, darts: &[Dart]) {
        for &d in darts {
            let e = edge_of(d);
            debug_assert_eq!(self.dir[e], d);
            self.dir[e] = twin(d);
        }
    }

    /// One round of minimization: reverse every clockwise level boundary.
    /// Returns the number of reversed arms.
    pub(crate) fn reverse_level_boundaries(&mut self) -> usize {
        let p = self.potentials();
        let arcs = self.level_arcs(&p);
        self.reverse(&arcs);
        arcs.len()
    }

    /// Recomputes all colors from the orientation, starting from the arms at
    /// the apex.
    pub(crate) fn recolor(&mut self) -> Result<()> {
        let g = &self.graph;
        let me = self.num_edges;
        let m = me - 3;
        let mut col: Vec<Option<Color>> = vec![None; g.m()];
        let mut queue = Vec::new();
        for k in 0..3 {
            let c = Color::ALL[k];
            for arm in [4 * me + k, 4 * (m + k), 4 * (m + k) + 2] {
                col[arm] = Some(c);
                let (x, y) = g.endpoints(arm);
                queue.extend([x, y]);
            }
        }
        let mut done = vec![false; g.n()];
        while let Some(x) = queue.pop() {
            if done[x] || x == self.n {
                continue;
            }
            done[x] = true;
            let rot = g.rotation(x);
            let derived = self.derive_colors(x, |d| col[edge_of(d)])?;
            for (i, &d) in rot.iter().enumerate() {
                let e = edge_of(d);
                match col[e] {
                    Some(c) if c != derived[i] => {
                        return Err(Error::InvalidWood(format!("color conflict on completion arm {e}")))
                    }
                    Some(_) => {}
                    None => {
                        col[e] = Some(derived[i]);
                        queue.push(g.head(d));
                    }
                }
            }
        }
        for (e, c) in col.into_iter().enumerate() {
            self.color[e] = c.ok_or_else(|| Error::InvalidWood(format!("completion arm {e} left uncolored")))?;
        }
        Ok(())
    }

    /// Colors of all arms at `x` in rotation order, implied by the
    /// orientation and any one already colored arm.
    fn derive_colors(&self, x: Vertex, known: impl Fn(Dart) -> Option<Color>) -> Result<Vec<Color>> {
        let rot = self.graph.rotation(x);
        let k = rot.len();
        let (j, cj) = rot
            .iter()
            .enumerate()
            .find_map(|(i, &d)| known(d).map(|c| (i, c)))
            .expect("queued vertices have a colored arm");
        let outs: Vec<usize> = (0..k).filter(|&i| self.is_out(rot[i])).collect();
        if outs.len() != self.alpha(x) {
            return Err(Error::InvalidWood(format!("completion vertex {x} has outdegree {}", outs.len())));
        }
        if let Node::Crossing(_) = self.node(x) {
            const PATTERN: [usize; 4] = [0, 1, 0, 2];
            let o = outs[0];
            let base = cj.shift(3 - PATTERN[(j + 4 - o) % 4]);
            return Ok((0..4).map(|i| base.shift(PATTERN[(i + 4 - o) % 4])).collect());
        }
        // last outgoing arm at or before position i, clockwise
        let last_out = |i: usize| -> usize {
            (0..k).map(|t| (i + k - t) % k).find(|&q| self.is_out(rot[q])).expect("has outgoing arms")
        };
        let q = outs.iter().position(|&o| o == last_out(j)).expect("is an outgoing arm");
        let c_q = if self.is_out(rot[j]) { cj } else { cj.next() };
        let out_color = |o: usize| {
            let t = outs.iter().position(|&p| p == o).expect("outgoing");
            c_q.shift((t + 3 - q) % 3)
        };
        Ok((0..k)
            .map(|i| {
                let c = out_color(last_out(i));
                if self.is_out(rot[i]) {
                    c
                } else {
                    c.prev()
                }
            })
            .collect())
    }

    fn labels_of(&self, edges: usize, tail_arm: usize, head_arm: usize) -> Vec<EdgeLabel> {
        (0..edges)
            .map(|e| {
                let (a, b) = (4 * e + tail_arm, 4 * e + head_arm);
                let from_tail = self.dir[a] == 2 * a + 1;
                let from_head = self.dir[b] == 2 * b + 1;
                match (from_tail, from_head) {
                    (true, true) => EdgeLabel::Bi { forward: self.color[a], backward: self.color[b] },
                    (true, false) => EdgeLabel::Uni { dart: 2 * e, color: self.color[a] },
                    _ => EdgeLabel::Uni { dart: 2 * e + 1, color: self.color[b] },
                }
            })
            .collect()
    }

    /// The primal wood encoded by the orientation and colors.
    pub fn primal_wood(&self) -> SchnyderWood {
        SchnyderWood::new(self.labels_of(self.num_edges - 3, 0, 2))
    }

    /// The wood of the suspended dual encoded by the orientation and colors.
    pub fn dual_wood(&self) -> SchnyderWood {
        // dual dart 2e runs from the right face (arm 3) to the left face (arm 1)
        SchnyderWood::new(self.labels_of(self.num_edges, 3, 1))
    }
}
