//! Combinatorial plane embeddings stored as rotation systems.
//!
//! Every undirected edge `e` owns the two darts `2e` and `2e + 1`, which are
//! twins of each other. The rotation of a vertex lists its outgoing darts in
//! clockwise order. Faces are the orbits of `d -> cw_next(twin(d))`, which
//! walks every face with the face on the left-hand side; inner faces are
//! therefore traversed counterclockwise and the outer face clockwise around
//! the graph.

use std::collections::HashSet;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Dart = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    head: Vec<Vertex>,
    rotation: Vec<Vec<Dart>>,
    pos: Vec<usize>,
    face_of: Vec<FaceId>,
    faces: Vec<Vec<Dart>>,
    outer: FaceId,
}

/// A face together with its boundary walk (darts with the face on their left).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub boundary: Vec<Dart>,
}

/// The planar dual of a plane graph. Dual vertex `f` is primal face `f`, and
/// dual edge `e` crosses primal edge `e`; dual dart `d` crosses primal dart
/// `d` from its right face to its left face.
#[derive(Debug, Clone)]
pub struct DualMap {
    pub dual_graph: PlaneGraph,
    /// `edge_bijection[e]` is the dual edge crossing primal edge `e`.
    pub edge_bijection: Vec<EdgeId>,
}

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> EdgeId {
    d / 2
}

impl PlaneGraph {
    /// Builds a simple plane graph from clockwise neighbor lists. `outer` is
    /// the outer face boundary listed clockwise around the graph.
    pub fn from_rotation(rotation: &[Vec<Vertex>], outer: &[Vertex]) -> Result<PlaneGraph> {
        let mut g = PlaneGraph::build_simple(rotation)?;
        g.set_outer_by_cycle(outer)?;
        Ok(g)
    }

    /// Simple graph from clockwise neighbor lists; the outer face is face 0
    /// until set otherwise.
    pub(crate) fn build_simple(rotation: &[Vec<Vertex>]) -> Result<PlaneGraph> {
        let n = rotation.len();
        for (v, nbrs) in rotation.iter().enumerate() {
            let mut seen = HashSet::new();
            for &u in nbrs {
                if u >= n {
                    return Err(Error::InconsistentRotation(format!("vertex {v} lists unknown neighbor {u}")));
                }
                if u == v {
                    return Err(Error::NonSimple(format!("loop at vertex {v}")));
                }
                if !seen.insert(u) {
                    return Err(Error::NonSimple(format!("vertex {v} lists neighbor {u} twice")));
                }
            }
        }
        // Assign edge ids in scan order and pair up the two darts.
        let mut dart_at: Vec<Vec<Option<Dart>>> = rotation.iter().map(|r| vec![None; r.len()]).collect();
        let mut head = Vec::new();
        for v in 0..n {
            for (i, &u) in rotation[v].iter().enumerate() {
                if dart_at[v][i].is_some() {
                    continue;
                }
                let j = rotation[u].iter().position(|&w| w == v).ok_or_else(|| {
                    Error::InconsistentRotation(format!("edge {v}-{u} appears only in the list of {v}"))
                })?;
                let d = head.len();
                head.push(u);
                head.push(v);
                dart_at[v][i] = Some(d);
                dart_at[u][j] = Some(d + 1);
            }
        }
        let rot: Vec<Vec<Dart>> =
            dart_at.into_iter().map(|r| r.into_iter().map(|d| d.expect("paired")).collect()).collect();
        PlaneGraph::from_parts(head, rot)
    }

    /// Builds a simple plane graph from its face boundaries. Each face is a
    /// vertex cycle walked with the face on the left (inner faces
    /// counterclockwise, the outer face clockwise around the graph).
    pub fn from_faces(n: usize, faces: &[Vec<Vertex>], outer_index: usize) -> Result<PlaneGraph> {
        let mut succ: Vec<std::collections::HashMap<Vertex, Vertex>> = vec![Default::default(); n];
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let prev = face[(i + k - 1) % k];
                let cur = face[i];
                let next = face[(i + 1) % k];
                if cur >= n || prev >= n || next >= n {
                    return Err(Error::InconsistentRotation(format!("face uses unknown vertex in {face:?}")));
                }
                if succ[cur].insert(prev, next).is_some() {
                    return Err(Error::InconsistentRotation(format!("corner {prev}-{cur}-{next} is used twice")));
                }
            }
        }
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let Some((&start, _)) = succ[v].iter().min_by_key(|(k, _)| **k) else {
                return Err(Error::Disconnected);
            };
            let mut order = vec![start];
            let mut cur = succ[v][&start];
            while cur != start {
                order.push(cur);
                cur = *succ[v]
                    .get(&cur)
                    .ok_or_else(|| Error::InconsistentRotation(format!("corners around {v} do not close up")))?;
                if order.len() > succ[v].len() {
                    break;
                }
            }
            if order.len() != succ[v].len() {
                return Err(Error::InconsistentRotation(format!("corners around vertex {v} form more than one cycle")));
            }
            rotation.push(order);
        }
        let outer =
            faces.get(outer_index).ok_or_else(|| Error::BadOuterFace(format!("no face with index {outer_index}")))?;
        PlaneGraph::from_rotation(&rotation, outer)
    }

    /// Dart-level constructor: `head[d]` for every dart and the clockwise
    /// rotation of every vertex. Parallel edges are allowed here (duals need
    /// them); loops are not. The outer face defaults to face 0.
    pub(crate) fn from_parts(head: Vec<Vertex>, rotation: Vec<Vec<Dart>>) -> Result<PlaneGraph> {
        let n = rotation.len();
        let nd = head.len();
        if !nd.is_multiple_of(2) {
            return Err(Error::InconsistentRotation("odd number of darts".into()));
        }
        let mut pos = vec![usize::MAX; nd];
        let mut tail = vec![usize::MAX; nd];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= nd || pos[d] != usize::MAX {
                    return Err(Error::InconsistentRotation(format!(
                        "dart {d} appears in more than one rotation slot"
                    )));
                }
                pos[d] = i;
                tail[d] = v;
            }
        }
        for d in 0..nd {
            if pos[d] == usize::MAX {
                return Err(Error::InconsistentRotation(format!("dart {d} has no tail")));
            }
            if head[d] >= n || head[d] != tail[twin(d)] {
                return Err(Error::InconsistentRotation(format!(
                    "dart {d} does not point back at the tail of its twin"
                )));
            }
            if head[d] == tail[d] {
                return Err(Error::NonSimple(format!("loop at vertex {}", head[d])));
            }
        }
        let mut g = PlaneGraph { head, rotation, pos, face_of: vec![usize::MAX; nd], faces: Vec::new(), outer: 0 };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        g.trace_faces();
        let euler = g.n() as i64 - g.m() as i64 + g.faces.len() as i64;
        if euler != 2 {
            return Err(Error::NotGenusZero(euler));
        }
        Ok(g)
    }

    fn trace_faces(&mut self) {
        let nd = self.head.len();
        for start in 0..nd {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let id = self.faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                self.face_of[d] = id;
                walk.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            self.faces.push(walk);
        }
    }

    fn set_outer_by_cycle(&mut self, outer: &[Vertex]) -> Result<()> {
        if outer.len() < 2 {
            return Err(Error::BadOuterFace("outer face needs at least two vertices".into()));
        }
        let d = self
            .find_dart(outer[0], outer[1])
            .ok_or_else(|| Error::BadOuterFace(format!("{}-{} is not an edge", outer[0], outer[1])))?;
        let f = self.face_of[d];
        let walk: Vec<Vertex> = self.faces[f].iter().map(|&x| self.tail(x)).collect();
        let start = self.faces[f].iter().position(|&x| x == d).unwrap_or(0);
        let rotated: Vec<Vertex> = (0..walk.len()).map(|i| walk[(start + i) % walk.len()]).collect();
        if rotated != outer {
            return Err(Error::BadOuterFace(format!(
                "clockwise walk {rotated:?} differs from the given outer boundary {outer:?}"
            )));
        }
        self.outer = f;
        Ok(())
    }

    pub(crate) fn set_outer_face(&mut self, f: FaceId) {
        assert!(f < self.faces.len());
        self.outer = f;
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn m(&self) -> usize {
        self.head.len() / 2
    }

    pub fn num_darts(&self) -> usize {
        self.head.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.head[d]
    }

    pub fn tail(&self, d: Dart) -> Vertex {
        self.head[twin(d)]
    }

    /// `(tail, head)` of the canonical dart `2e`.
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        (self.tail(2 * e), self.head(2 * e))
    }

    pub fn rotation(&self, v: Vertex) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.rotation[v].iter().map(move |&d| self.head[d])
    }

    /// Index of `d` in the rotation of its tail.
    pub fn position(&self, d: Dart) -> usize {
        self.pos[d]
    }

    /// The dart following `d` clockwise around its tail.
    pub fn cw_next(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.pos[d] + 1) % rot.len()]
    }

    /// The dart preceding `d` clockwise around its tail.
    pub fn cw_prev(&self, d: Dart) -> Dart {
        let rot = &self.rotation[self.tail(d)];
        rot[(self.pos[d] + rot.len() - 1) % rot.len()]
    }

    /// Successor of `d` on the boundary of its left face.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.cw_next(twin(d))
    }

    pub fn left_face(&self, d: Dart) -> FaceId {
        self.face_of[d]
    }

    pub fn right_face(&self, d: Dart) -> FaceId {
        self.face_of[twin(d)]
    }

    pub fn face_boundary(&self, f: FaceId) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_vertices(&self, f: FaceId) -> Vec<Vertex> {
        self.faces[f].iter().map(|&d| self.tail(d)).collect()
    }

    pub fn faces(&self) -> Vec<Face> {
        self.faces.iter().enumerate().map(|(id, b)| Face { id, boundary: b.clone() }).collect()
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer
    }

    /// Outer face boundary, clockwise around the graph.
    pub fn outer_boundary(&self) -> Vec<Vertex> {
        self.face_vertices(self.outer)
    }

    pub fn find_dart(&self, u: Vertex, v: Vertex) -> Option<Dart> {
        self.rotation.get(u)?.iter().copied().find(|&d| self.head[d] == v)
    }

    pub fn find_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.find_dart(u, v).map(edge_of)
    }

    /// Clockwise neighbor lists, the input format of [`PlaneGraph::from_rotation`].
    pub fn rotation_lists(&self) -> Vec<Vec<Vertex>> {
        (0..self.n()).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.m()).map(move |e| self.endpoints(e))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges().all(|(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_connected(&self) -> bool {
        connected_without(self, &[])
    }

    /// Planar dual. The outer face of the dual is the face around the first
    /// vertex of the primal outer boundary.
    pub fn dual(&self) -> DualMap {
        let nf = self.faces.len();
        let mut head = vec![0; self.head.len()];
        for d in 0..self.head.len() {
            head[d] = self.left_face(d);
        }
        let mut rotation = vec![Vec::new(); nf];
        for (f, boundary) in self.faces.iter().enumerate() {
            rotation[f] = boundary.iter().rev().map(|&b| twin(b)).collect();
        }
        let mut dual = PlaneGraph::from_parts(head, rotation).expect("dual of a plane graph is a plane graph");
        // Dual face around primal vertex v contains the dual darts crossing
        // the primal darts leaving v.
        let v0 = self.tail(self.faces[self.outer][0]);
        let f = dual.left_face(self.rotation[v0][0]);
        dual.set_outer_face(f);
        DualMap { dual_graph: dual, edge_bijection: (0..self.m()).collect() }
    }

    /// Face of the dual graph that surrounds primal vertex `v`.
    pub fn dual_face_of_vertex(dual: &PlaneGraph, primal: &PlaneGraph, v: Vertex) -> FaceId {
        dual.left_face(primal.rotation[v][0])
    }
}

/// Connectivity of `g` after deleting the vertices in `removed`.
pub fn connected_without(g: &PlaneGraph, removed: &[Vertex]) -> bool {
    let n = g.n();
    let mut dead = vec![false; n];
    for &x in removed {
        dead[x] = true;
    }
    let Some(start) = (0..n).find(|&v| !dead[v]) else {
        return true;
    };
    let mut seen = dead.clone();
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n - removed.iter().collect::<HashSet<_>>().len()
}

/// True iff `g` minus `removed` is connected and has no cut vertex.
fn biconnected_without(g: &PlaneGraph, removed: Vertex) -> bool {
    let n = g.n();
    let Some(root) = (0..n).find(|&v| v != removed) else {
        return true;
    };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut root_children = 0;
    // (vertex, parent, next rotation index)
    let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if *idx < g.degree(v) {
            let u = g.head(g.rotation(v)[*idx]);
            *idx += 1;
            if u == removed || u == parent {
                continue;
            }
            if disc[u] == usize::MAX {
                disc[u] = time;
                low[u] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((u, v, 0));
            } else {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    if root_children > 1 {
        return false;
    }
    (0..n).all(|v| v == removed || disc[v] != usize::MAX)
}

/// 3-connectivity: at least four vertices and no separating set of size two.
/// Runs a cut-vertex search on `g - x` for every vertex `x`.
pub fn is_3_connected(g: &PlaneGraph) -> bool {
    if g.n() < 4 || !g.is_connected() {
        return false;
    }
    (0..g.n()).all(|x| biconnected_without(g, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> PlaneGraph {
        // Outer triangle 0,1,2 clockwise, vertex 3 inside.
        PlaneGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]], 0).unwrap()
    }

    #[test]
    fn k4_counts() {
        let g = k4();
        assert_eq!((g.n(), g.m(), g.num_faces()), (4, 6, 4));
        assert_eq!(g.outer_boundary(), vec![0, 1, 2]);
        for f in g.faces() {
            assert_eq!(f.boundary.len(), 3);
        }
        assert!(is_3_connected(&g));
    }

    #[test]
    fn twin_and_rotation_invariants() {
        let g = k4();
        for d in 0..g.num_darts() {
            assert_eq!(twin(twin(d)), d);
            assert_eq!(g.head(twin(d)), g.tail(d));
            assert_eq!(g.rotation(g.tail(d))[g.position(d)], d);
            assert_eq!(g.cw_prev(g.cw_next(d)), d);
        }
    }

    #[test]
    fn duplicated_neighbor_is_rejected() {
        let rot = vec![vec![1, 2, 3, 1], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        assert!(matches!(PlaneGraph::from_rotation(&rot, &[0, 1, 2]), Err(Error::NonSimple(_))));
    }

    #[test]
    fn one_sided_edge_is_rejected() {
        let rot = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![2, 1]];
        assert!(matches!(PlaneGraph::from_rotation(&rot, &[0, 1, 2]), Err(Error::InconsistentRotation(_))));
    }

    #[test]
    fn disconnected_is_rejected() {
        let rot = vec![vec![1], vec![0], vec![3], vec![2]];
        assert_eq!(PlaneGraph::from_rotation(&rot, &[0, 1]), Err(Error::Disconnected));
    }

    #[test]
    fn non_planar_rotation_is_rejected() {
        // K4 with one vertex's rotation reversed has genus one.
        let g = k4();
        let mut rot = g.rotation_lists();
        rot[3].reverse();
        assert!(matches!(PlaneGraph::from_rotation(&rot, &[0, 1, 2]), Err(Error::NotGenusZero(_))));
    }

    #[test]
    fn wrong_outer_face_is_rejected() {
        let g = k4();
        let rot = g.rotation_lists();
        // Counterclockwise listing of the outer triangle.
        assert!(matches!(PlaneGraph::from_rotation(&rot, &[0, 2, 1]), Err(Error::BadOuterFace(_))));
    }

    #[test]
    fn dual_of_k4_is_k4() {
        let g = k4();
        let d = g.dual();
        let dg = &d.dual_graph;
        assert_eq!((dg.n(), dg.m(), dg.num_faces()), (4, 6, 4));
        assert!(dg.is_simple());
        for v in 0..4 {
            assert_eq!(dg.degree(v), 3);
        }
    }

    #[test]
    fn double_dual_restores_rotations() {
        let g = k4();
        let d = g.dual().dual_graph;
        let dd = d.dual().dual_graph;
        for v in 0..g.n() {
            let f = PlaneGraph::dual_face_of_vertex(&d, &g, v);
            // dd vertex f is the face of d around v; its darts are the twins
            // of the darts leaving v, in the same cyclic order.
            let rot: Vec<Dart> = dd.rotation(f).iter().map(|&x| twin(x)).collect();
            let want = g.rotation(v);
            let k = rot.iter().position(|&x| x == want[0]).unwrap();
            let rotated: Vec<Dart> = (0..rot.len()).map(|i| rot[(k + i) % rot.len()]).collect();
            assert_eq!(rotated, want);
        }
    }

    #[test]
    fn path_is_not_3_connected() {
        let rot = vec![vec![1], vec![0, 2], vec![1, 3], vec![2]];
        let g = PlaneGraph::from_rotation(&rot, &[0, 1, 2, 3, 2, 1]).unwrap();
        assert!(!is_3_connected(&g));
    }
}
